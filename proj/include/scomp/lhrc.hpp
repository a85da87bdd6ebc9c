#ifndef SCOMP_LHRC_HPP
#define SCOMP_LHRC_HPP

#include <vector>

#include "scomp/bigint.hpp"

namespace scomp {

// A linear homogeneous recurrence with constant coefficients,
//   f(n) = sum_i coeffs[i] * f(n - offsets[i]),
// seeded by initial[0 .. max(offsets)-1].
struct Lhrc {
    std::vector<int> offsets;        // strictly increasing, all >= 1
    std::vector<long long> coeffs;   // same length as offsets, all nonzero
    std::vector<BigInt> initial;     // exactly max(offsets) values

    int order() const { return offsets.back(); }
    void validate() const;           // throws std::invalid_argument
};

// f(n) by forward iteration from the initial values.
BigInt eval_dp(const Lhrc& rec, int n);

// The resolvent-sum kernel: with D = a_l - a_1 and q'' = q - D, the weighted
// count of compositions of q'' into offsets, each part a weighted by its
// coefficient. Computed through the Diophantine route:
//   sum over { x >= 0 : offsets . x = q'' } of power_product(coeffs, x) * C(x).
// Zero for q'' < 0; one for q'' = 0 (empty composition).
BigInt resolvent_sum(const Lhrc& rec, long long q);

// Same kernel for a two-offset recurrence, evaluated through the Bezout
// parametrization of the one-parameter solution family.
BigInt resolvent_sum_pair(int a1, int a2, long long k1, long long k2, long long q);

// Three-offset kernel: iterate the third coordinate and resolve the residual
// two-variable equation per step. The inner family must use the residual
// qhat = q' - a3*x3, not q'.
BigInt resolvent_sum_triple(int a1, int a2, int a3, long long k1, long long k2,
                            long long k3, long long q);

// Coefficients of f(n) expanded over the initial values:
//   f(n) = sum_{i=0}^{a_l-1} V(n,i) * f(i).
// Requires n >= max(offsets).
struct SolutionCoefficients {
    int n;
    std::vector<BigInt> v;  // v[i] = V(n, i), i in [0 : a_l-1]
};

SolutionCoefficients solution_coefficients(const Lhrc& rec, int n);

// f(n) through the resolvent sums; equals eval_dp exactly. Defers to the
// initial values for n < max(offsets).
BigInt solve_closed(const Lhrc& rec, int n);

// Specializations that route the kernel through the Bezout family; the
// recurrence must have exactly two (resp. three) offsets.
BigInt solve_two_term(const Lhrc& rec, int n);
BigInt solve_three_term(const Lhrc& rec, int n);

}  // namespace scomp

#endif

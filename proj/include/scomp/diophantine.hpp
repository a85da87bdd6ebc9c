#ifndef SCOMP_DIOPHANTINE_HPP
#define SCOMP_DIOPHANTINE_HPP

#include <functional>
#include <vector>

#include "scomp/bigint.hpp"
#include "scomp/partset.hpp"

namespace scomp {

// A nonnegative integer vector x with a.x = q for its owning equation.
using SolutionVector = std::vector<BigInt>;

struct BezoutTriple {
    long long g;  // gcd(a1, a2) > 0
    long long r;  // r*a1 + s*a2 = g
    long long s;
};

// Extended Euclid. Callers must not depend on which valid (r, s) pair comes
// back; shifting (r, s) by multiples of (a2/g, -a1/g) is always legal.
BezoutTriple bezout(long long a1, long long a2);

// Exactly { x >= 0 : a.x = q }, sorted. Empty when q < 0; the zero vector
// alone when q = 0. Enumeration recurses on the last coordinate.
std::vector<SolutionVector> nonneg_solutions(const PartVector& a, long long q);

// Streaming form of nonneg_solutions; visits each solution once with small
// integer components.
void for_each_solution(const PartVector& a, long long q,
                       const std::function<void(const std::vector<long long>&)>& visit);

// All nonnegative solutions of a1*x1 + a2*x2 = q as an affine family in one
// parameter t: x(t) = [r*q/g + (a2/g)*t, s*q/g - (a1/g)*t] for lo <= t <= hi.
// Empty (lo > hi) when gcd(a1, a2) does not divide q or q < 0.
struct TwoVarFamily {
    long long a1, a2;
    long long q;
    long long g, r, s;
    long long lo, hi;  // empty family iff lo > hi

    bool empty() const { return lo > hi; }
    SolutionVector at(long long t) const;
    std::vector<long long> at_raw(long long t) const;
};

TwoVarFamily two_var_family(int a1, int a2, long long q);

// (sum x_i)! / prod(x_i!), exact.
BigInt multinomial(const SolutionVector& x);

// prod k_j^(x_j), sign-exact for negative k_j. |k| must equal |x|.
BigInt power_product(const std::vector<long long>& k, const SolutionVector& x);

// Counts compositions of n over a fixed finite set by summing multinomials
// over all nonnegative solutions of v^S . x = n.
BigInt direct_count(const PartSet& s, int n);

}  // namespace scomp

#endif

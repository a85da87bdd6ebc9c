#include "scomp/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

#include "scomp/errors.hpp"

namespace scomp {

BezoutTriple bezout(long long a1, long long a2) {
    if (a1 < 1 || a2 < 1) throw std::invalid_argument("bezout: arguments must be >= 1");
    long long old_r = a1, r = a2;
    long long old_s = 1, s = 0;
    long long old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    return BezoutTriple{old_r, old_s, old_t};
}

namespace {

void solutions_rec(const PartVector& a, std::size_t idx, long long remaining,
                   std::vector<long long>& x,
                   const std::function<void(const std::vector<long long>&)>& visit) {
    if (idx == 0) {
        if (remaining % a[0] == 0) {
            x[0] = remaining / a[0];
            visit(x);
        }
        return;
    }
    long long bound = remaining / a[idx];
    for (long long v = 0; v <= bound; ++v) {
        x[idx] = v;
        solutions_rec(a, idx - 1, remaining - v * a[idx], x, visit);
    }
}

}  // namespace

void for_each_solution(const PartVector& a, long long q,
                       const std::function<void(const std::vector<long long>&)>& visit) {
    if (a.empty()) throw std::invalid_argument("for_each_solution: empty coefficient vector");
    if (q < 0) return;
    std::vector<long long> x(a.size(), 0);
    solutions_rec(a, a.size() - 1, q, x, visit);
}

std::vector<SolutionVector> nonneg_solutions(const PartVector& a, long long q) {
    std::vector<SolutionVector> out;
    for_each_solution(a, q, [&out](const std::vector<long long>& x) {
        out.emplace_back(x.begin(), x.end());
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> TwoVarFamily::at_raw(long long t) const {
    return {r * (q / g) + (a2 / g) * t, s * (q / g) - (a1 / g) * t};
}

SolutionVector TwoVarFamily::at(long long t) const {
    auto raw = at_raw(t);
    return SolutionVector(raw.begin(), raw.end());
}

TwoVarFamily two_var_family(int a1, int a2, long long q) {
    if (!(1 <= a1 && a1 < a2)) throw std::invalid_argument("two_var_family: requires 1 <= a1 < a2");
    auto [g, r, s] = bezout(a1, a2);
    TwoVarFamily family{a1, a2, q, g, r, s, 0, -1};
    if (q < 0 || q % g != 0) return family;
    // x1(t) = r*q/g + (a2/g) t >= 0  and  x2(t) = s*q/g - (a1/g) t >= 0.
    family.lo = ceil_div(-r * (q / g), a2 / g);
    family.hi = floor_div(s * (q / g), a1 / g);
    return family;
}

BigInt multinomial(const SolutionVector& x) {
    BigInt result = 1;
    BigInt total = 0;
    for (const BigInt& xi : x) {
        if (xi < 0) throw std::invalid_argument("multinomial: components must be >= 0");
        total += xi;
        // result *= C(total, xi); every intermediate division is exact.
        for (BigInt i = 1; i <= xi; ++i) {
            result *= total - xi + i;
            result /= i;
        }
    }
    return result;
}

BigInt power_product(const std::vector<long long>& k, const SolutionVector& x) {
    if (k.size() != x.size())
        throw std::invalid_argument("power_product: vectors must have the same length");
    BigInt result = 1;
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (x[j] < 0) throw std::invalid_argument("power_product: exponents must be >= 0");
        result *= int_pow(BigInt(k[j]), x[j].convert_to<std::uint64_t>());
    }
    return result;
}

BigInt direct_count(const PartSet& s, int n) {
    if (n < 0) throw std::invalid_argument("direct_count: n must be >= 0");
    if (!s.finite())
        throw unsupported_error("direct_count requires a fixed finite set");
    PartVector a = s.kind() == SetKind::Explicit
                       ? s.values()
                       : materialize(s, *s.hi());
    BigInt total = 0;
    for_each_solution(a, n, [&](const std::vector<long long>& x) {
        total += multinomial(SolutionVector(x.begin(), x.end()));
    });
    return total;
}

}  // namespace scomp

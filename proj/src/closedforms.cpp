#include "scomp/closedforms.hpp"

#include <stdexcept>

#include "scomp/errors.hpp"
#include "scomp/lhrc.hpp"

namespace scomp {

namespace {

BigInt pow2(long long e) { return int_pow(BigInt(2), static_cast<std::uint64_t>(e)); }

}  // namespace

BigInt count_two_part(int a1, int a2, int n) {
    if (a1 < 1 || a1 >= a2) throw std::invalid_argument("count_two_part: requires 1 <= a1 < a2");
    if (n < 0) throw std::invalid_argument("count_two_part: n must be >= 0");
    // Below the recurrence order only runs of a1 fit: one composition when
    // a1 divides n, none otherwise.
    if (n < a2) return n % a1 == 0 ? 1 : 0;

    auto fr = [&](long long q) { return resolvent_sum_pair(a1, a2, 1, 1, q); };
    BigInt total = 0;
    long long split = (a2 - a1 - 1) / a1;
    for (long long h = 0; h <= split; ++h) total += fr(n - a1 * (h + 1));
    for (long long h = split + 1; h <= (a2 - 1) / a1; ++h) total += fr(n - a1 * (h + 1) + a2);
    return total;
}

BigInt count_residue(int r, int m, int n) {
    if (r < 1 || m < 1 || r > m) throw std::invalid_argument("count_residue: requires 1 <= r <= m");
    if (n < 0) throw std::invalid_argument("count_residue: n must be >= 0");
    if (n == 0) return 1;
    if (r == m) {
        // Parts are the multiples of m; dividing through by m leaves an
        // unrestricted composition of n/m.
        return n % m == 0 ? pow2(n / m - 1) : BigInt(0);
    }
    if (n < r) return 0;
    return count_two_part(r, m, n - r);
}

BigInt count_up_to_m(int m, int n) {
    if (m < 1) throw std::invalid_argument("count_up_to_m: m must be >= 1");
    if (n < 0) throw std::invalid_argument("count_up_to_m: n must be >= 0");
    if (n == 0) return 1;
    if (n <= m) return pow2(n - 1);  // no part can exceed n, so all compositions fit

    auto fr = [&](long long q) { return resolvent_sum_pair(1, m + 1, 2, -1, q); };
    BigInt total = pow2(m - 1) * fr(n) - fr(n - 1);
    for (int i = 1; i <= m - 1; ++i) total -= pow2(i - 1) * fr(n - i - 1);
    return total;
}

BigInt count_from_m(int m, int n) {
    if (m < 1) throw std::invalid_argument("count_from_m: m must be >= 1");
    if (n < 0) throw std::invalid_argument("count_from_m: n must be >= 0");
    if (n == 0) return 1;
    if (m == 1) return pow2(n - 1);
    int q = n - m;
    if (q < 0) return 0;
    if (q < m) return 1;  // the reduced count of q over {1, m} is a run of ones

    auto fr = [&](long long arg) { return resolvent_sum_pair(1, m, 1, 1, arg); };
    BigInt total = fr(q);
    for (int i = 0; i <= m - 2; ++i) total += fr(q - i - 1);
    return total;
}

BigInt count_without_m(int m, int n) {
    if (m < 1) throw std::invalid_argument("count_without_m: m must be >= 1");
    if (n < 0) throw std::invalid_argument("count_without_m: n must be >= 0");
    if (n == 0) return 1;
    if (m == 1) {
        // Parts >= 2: a Fibonacci count expressed as a binomial sum.
        if (n == 1) return 0;
        BigInt total = 0;
        for (long long t = (n - 1) / 2; t <= n - 2; ++t) total += binomial(t, n - 2 - t);
        return total;
    }
    if (n == 1) return 1;
    if (n <= m - 1) return pow2(n - 1);
    if (n == m) return pow2(m - 1) - 1;

    auto fr = [&](long long q) { return resolvent_sum_triple(1, m, m + 1, 2, -1, 1, q); };
    BigInt total = (pow2(m - 1) - 1) * fr(n) + pow2(m - 2) * fr(n - m);
    for (int i = 2; i <= m - 1; ++i) total -= pow2(i - 2) * fr(n - i);
    return total;
}

BigInt count_without_range(int m1, int m2, int n) {
    if (m1 < 1 || m2 < m1)
        throw std::invalid_argument("count_without_range: requires 1 <= m1 <= m2");
    if (n < 0) throw std::invalid_argument("count_without_range: n must be >= 0");
    if (m1 == m2) return count_without_m(m1, n);
    if (m1 == 1) return count_from_m(m2 + 1, n);

    // Boundary recurrence with offsets [1, m1, m2+1]; seeds below m1 are the
    // unrestricted counts and seeds in [m1:m2] fall back to parts < m1.
    Lhrc rec;
    rec.offsets = {1, m1, m2 + 1};
    rec.coeffs = {2, -1, 1};
    rec.initial.resize(static_cast<std::size_t>(m2) + 1);
    rec.initial[0] = 1;
    for (int i = 1; i <= m1 - 1; ++i) rec.initial[i] = pow2(i - 1);
    for (int i = m1; i <= m2; ++i) rec.initial[i] = count_up_to_m(m1 - 1, i);
    return solve_three_term(rec, n);
}

std::optional<FamilyCount> classify_family(const PartSet& s) {
    switch (s.kind()) {
        case SetKind::Explicit:
            if (s.values().size() == 2) return FamilyCount{FamilyKind::TwoPart, s.values()[0], s.values()[1]};
            return std::nullopt;
        case SetKind::Range:
            if (!s.hi()) return FamilyCount{FamilyKind::FromM, s.lo(), 0};
            if (s.lo() == 1) return FamilyCount{FamilyKind::UpToM, *s.hi(), 0};
            return std::nullopt;
        case SetKind::Residue:
            return FamilyCount{FamilyKind::Residue, s.residue_r(), s.residue_m()};
        case SetKind::ComplementSet:
            if (s.values().size() == 1) return FamilyCount{FamilyKind::WithoutM, s.values()[0], 0};
            return std::nullopt;
        case SetKind::ComplementRange:
            return FamilyCount{FamilyKind::WithoutRange, s.m1(), s.m2()};
    }
    return std::nullopt;
}

BigInt count_closed(const PartSet& s, int n) {
    auto family = classify_family(s);
    if (!family)
        throw unsupported_error("no closed form covers the set " + s.to_spec());
    switch (family->family) {
        case FamilyKind::TwoPart: return count_two_part(family->p1, family->p2, n);
        case FamilyKind::Residue: return count_residue(family->p1, family->p2, n);
        case FamilyKind::UpToM: return count_up_to_m(family->p1, n);
        case FamilyKind::FromM: return count_from_m(family->p1, n);
        case FamilyKind::WithoutM: return count_without_m(family->p1, n);
        case FamilyKind::WithoutRange: return count_without_range(family->p1, family->p2, n);
    }
    throw std::logic_error("unreachable");
}

}  // namespace scomp

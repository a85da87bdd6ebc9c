#ifndef SCOMP_CLOSEDFORMS_HPP
#define SCOMP_CLOSEDFORMS_HPP

#include <optional>

#include "scomp/bigint.hpp"
#include "scomp/partset.hpp"

namespace scomp {

// Closed-form counts for the classical composition families. Every function
// returns count_brute of the corresponding set, verified by the test suite.

// Parts drawn from {a1, a2}, a1 < a2.
BigInt count_two_part(int a1, int a2, int n);

// Parts congruent to r modulo m (1 <= r <= m). Reduces to a two-part count
// of n - r over {r, m}; for r = m the parts are the multiples of m and the
// count collapses to 2^(n/m - 1) when m divides n.
BigInt count_residue(int r, int m, int n);

// Parts in [1:m].
BigInt count_up_to_m(int m, int n);

// Parts >= m. Reduces to the two-part count of n - m over {1, m}.
BigInt count_from_m(int m, int n);

// Parts in [1:n] with m excluded.
BigInt count_without_m(int m, int n);

// Parts in [1:n] with [m1:m2] excluded.
BigInt count_without_range(int m1, int m2, int n);

enum class FamilyKind { TwoPart, Residue, UpToM, FromM, WithoutM, WithoutRange };

struct FamilyCount {
    FamilyKind family;
    int p1 = 0;  // a1 / r / m / m1
    int p2 = 0;  // a2 / m / m2 where applicable
};

// Matches a set against the families above; empty when no closed form applies.
std::optional<FamilyCount> classify_family(const PartSet& s);

// Dispatches through classify_family; throws unsupported_error otherwise.
BigInt count_closed(const PartSet& s, int n);

}  // namespace scomp

#endif

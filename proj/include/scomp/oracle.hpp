#ifndef SCOMP_ORACLE_HPP
#define SCOMP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "scomp/bigint.hpp"
#include "scomp/partset.hpp"

namespace scomp {

// An ordered tuple of positive integers; the empty tuple is the unique
// composition of 0. Tuples compare lexicographically.
using Composition = std::vector<int>;

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 10'000'000;

// All compositions of n with parts in S<=n, in lexicographic order.
// Throws limit_error when the total count exceeds `ceiling`.
std::vector<Composition> enumerate(const PartSet& s, int n,
                                   std::uint64_t ceiling = kDefaultEnumerationCeiling);

// |enumerate(s, n)| via a counting recursion memoized on the remaining sum;
// usable far beyond the range where materializing the list is feasible.
BigInt count_brute(const PartSet& s, int n);

// Same counting recursion over an arbitrary membership predicate.
BigInt count_brute(const std::function<bool(int)>& member, int n);

// Derives the full composition set of i from lower levels:
//   (a) for i != 1, bump the first part of each composition of i-1 when the
//       bumped part stays in S;
//   (b) prepend each s in S<=i with s-1 not in S to the compositions of i-s.
// `prior` must hold every level the two steps read; a missing level is a
// precondition violation.
std::set<Composition> build_next_level(const PartSet& s, int i,
                                       const std::map<int, std::set<Composition>>& prior);

// Union of the composition sets of n-(max(S)-1) .. n, grown breadth-first
// from the singletons of S. Requires a fixed finite S with n >= max(S).
std::set<Composition> window_generate(const PartSet& s, int n);

}  // namespace scomp

#endif

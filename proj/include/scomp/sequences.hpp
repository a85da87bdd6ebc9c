#ifndef SCOMP_SEQUENCES_HPP
#define SCOMP_SEQUENCES_HPP

#include <string>
#include <vector>

#include "scomp/bigint.hpp"

namespace scomp {

enum class Method { Closed, Recurrence };

// m-step Fibonacci: F(n) = F(n-1) + ... + F(n-m), seeded with m-1 zeros and
// a one. m = 2 is Fibonacci, 3 Tribonacci, 4 Tetranacci.
BigInt m_fibonacci(int m, int n, Method method = Method::Closed);

// Lucas numbers under the 1, 3, 4, 7, ... seeding.
BigInt lucas(int n, Method method = Method::Closed);

// Padovan 0, 1, 0, 1, 1, 1, 2, ... and Perrin 3, 0, 2, 3, 2, 5, ...
BigInt padovan(int n, Method method = Method::Closed);
BigInt perrin(int n, Method method = Method::Closed);

// Pell 0, 1, 2, 5, 12, ... and Pell-Lucas 2, 2, 6, 14, ...
BigInt pell(int n, Method method = Method::Closed);
BigInt pell_lucas(int n, Method method = Method::Closed);

struct BijectionEvidence {
    int n;
    BigInt lhs;  // composition count
    BigInt rhs;  // sequence value compared against
    int shift;
    std::string convention;
};

struct BijectionVerdict {
    int claim_id;          // 1..5
    std::string claim;     // human-readable statement
    bool confirmed;
    int shift;             // meaningful only when confirmed: lhs(n) = seq(n + shift)
    std::string convention;
    std::vector<BijectionEvidence> evidence;
};

// Checks the five classical correspondences between restricted-composition
// counts and the sequences above, searching shifts |d| <= 6 under both the
// recurrence seedings used here and the standard ones (Padovan 1,1,1,...;
// Fibonacci 1,1,2,...). A claim is confirmed only when one shift matches at
// every tested n; a refuted claim carries one counterexample per candidate.
std::vector<BijectionVerdict> verify_bijections(int n_max);

}  // namespace scomp

#endif

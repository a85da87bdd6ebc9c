#ifndef SCOMP_INTERPRETERS_HPP
#define SCOMP_INTERPRETERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "scomp/lhrc.hpp"
#include "scomp/partset.hpp"

namespace scomp {

// Recurrence over offsets v^{S<=n} with unit coefficients; initial values
// computed by running the same recurrence upward from f(0) = 1.
Lhrc first_interpreter(const PartSet& s, int n);

// Raw terms of the boundary recurrence at n, before merging equal offsets:
// the base term (offset 1, +1), a -1 for every s with s-1 in S<=n and s not
// in S, and a +1 for every s in S<=n with s-1 not in S.
std::vector<std::pair<int, int>> second_interpreter_terms(const PartSet& s, int n);

// The boundary recurrence with equal offsets merged and zero coefficients
// dropped; initial values are brute-force counts. Unsupported when the term
// pattern is unbounded (residue classes with modulus >= 2) or when every
// term merges onto offset 1, which leaves no room to seed f(1).
Lhrc second_interpreter(const PartSet& s, int n);

bool second_interpreter_supported(const PartSet& s, int n);

enum class InterpreterKind { First, Second };

struct InterpreterChoice {
    InterpreterKind which;
    int t1;                    // |S<=n|
    std::optional<int> t2;     // distinct raw offsets; empty when unbounded
    Lhrc rec;
};

// Picks the interpreter with fewer terms (ties go to the first); falls back
// to the first interpreter when the second is unsupported.
InterpreterChoice choose_interpreter(const PartSet& s, int n);

}  // namespace scomp

#endif

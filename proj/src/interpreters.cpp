#include "scomp/interpreters.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "scomp/errors.hpp"
#include "scomp/oracle.hpp"

namespace scomp {

Lhrc first_interpreter(const PartSet& s, int n) {
    if (n < 1) throw std::invalid_argument("first_interpreter: n must be >= 1");
    PartVector offsets = materialize(s, n);
    if (offsets.empty())
        throw unsupported_error("first_interpreter: S<=n is empty for " + s.to_spec());

    Lhrc rec;
    rec.offsets = offsets;
    rec.coeffs.assign(offsets.size(), 1);

    // Seeds by running the counting recurrence upward: f(0) = 1, and each
    // f(m) sums f(m - part) over the parts usable at m.
    int order = offsets.back();
    rec.initial.resize(static_cast<std::size_t>(order));
    rec.initial[0] = 1;
    for (int m = 1; m < order; ++m) {
        BigInt total = 0;
        for (int part : materialize(s, m)) total += rec.initial[m - part];
        rec.initial[m] = std::move(total);
    }
    return rec;
}

std::vector<std::pair<int, int>> second_interpreter_terms(const PartSet& s, int n) {
    std::vector<std::pair<int, int>> terms;
    terms.emplace_back(1, 1);
    for (int cand = 1; cand <= n + 1; ++cand) {
        bool in_set = s.member(cand);
        bool pred_in_set = s.member(cand - 1);
        if (pred_in_set && cand - 1 <= n && !in_set) terms.emplace_back(cand, -1);
        if (in_set && cand <= n && !pred_in_set) terms.emplace_back(cand, 1);
    }
    return terms;
}

bool second_interpreter_supported(const PartSet& s, int n) {
    if (s.kind() == SetKind::Residue && s.residue_m() >= 2) return false;
    std::map<int, int> merged;
    for (auto [offset, coeff] : second_interpreter_terms(s, n)) merged[offset] += coeff;
    int max_offset = 0;
    for (auto [offset, coeff] : merged)
        if (coeff != 0) max_offset = std::max(max_offset, offset);
    return max_offset >= 2;
}

Lhrc second_interpreter(const PartSet& s, int n) {
    if (n < 2) throw std::invalid_argument("second_interpreter: n must be > 1");
    if (s.kind() == SetKind::Residue && s.residue_m() >= 2)
        throw unsupported_error(
            "second_interpreter: residue classes with modulus >= 2 have an unbounded term "
            "pattern; use the first interpreter or the residue reduction");
    if (materialize(s, n).empty())
        throw unsupported_error("second_interpreter: S<=n is empty for " + s.to_spec());

    std::map<int, int> merged;
    for (auto [offset, coeff] : second_interpreter_terms(s, n)) merged[offset] += coeff;

    Lhrc rec;
    for (auto [offset, coeff] : merged) {
        if (coeff == 0) continue;
        rec.offsets.push_back(offset);
        rec.coeffs.push_back(coeff);
    }
    if (rec.offsets.empty() || rec.offsets.back() < 2)
        throw unsupported_error(
            "second_interpreter: every term merges onto offset 1 for " + s.to_spec() +
            "; the recurrence only holds from n = 2 and cannot seed f(1)");

    int order = rec.offsets.back();
    rec.initial.reserve(static_cast<std::size_t>(order));
    for (int i = 0; i < order; ++i) rec.initial.push_back(count_brute(s, i));
    return rec;
}

InterpreterChoice choose_interpreter(const PartSet& s, int n) {
    if (n < 1) throw std::invalid_argument("choose_interpreter: n must be >= 1");
    int t1 = static_cast<int>(materialize(s, n).size());

    std::optional<int> t2;
    if (!(s.kind() == SetKind::Residue && s.residue_m() >= 2)) {
        std::set<int> distinct;
        for (auto [offset, coeff] : second_interpreter_terms(s, n)) {
            (void)coeff;
            distinct.insert(offset);
        }
        t2 = static_cast<int>(distinct.size());
    }

    bool second_ok = n >= 2 && second_interpreter_supported(s, n);
    if (second_ok && t2 && t1 > *t2)
        return InterpreterChoice{InterpreterKind::Second, t1, t2, second_interpreter(s, n)};
    return InterpreterChoice{InterpreterKind::First, t1, t2, first_interpreter(s, n)};
}

}  // namespace scomp

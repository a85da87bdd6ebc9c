#ifndef SCOMP_PARTSET_HPP
#define SCOMP_PARTSET_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scomp {

// v^A for a finite set A: its members in strictly increasing order.
using PartVector = std::vector<int>;

enum class SetKind {
    Explicit,         // {a,b,...}
    Range,            // lo..hi or lo..
    Residue,          // mod(r,m): {a >= 1 : a == r (mod m)}
    ComplementSet,    // not{a,b,...}: [1:n] minus the listed values
    ComplementRange,  // not(m1..m2): [1:n] minus [m1:m2]
};

// Symbolic description of the allowed-summand set S. Immutable after
// construction; the complement variants denote [1:n] \ X with n supplied
// at materialization time, so their denotation grows with n.
class PartSet {
public:
    static PartSet explicit_set(std::vector<int> values);
    static PartSet range(int lo, std::optional<int> hi);
    static PartSet residue(int r, int m);
    static PartSet complement_set(std::vector<int> excluded);
    static PartSet complement_range(int m1, int m2);

    SetKind kind() const { return kind_; }

    // Explicit / ComplementSet payload.
    const std::vector<int>& values() const { return values_; }
    // Range payload.
    int lo() const { return a_; }
    std::optional<int> hi() const { return b_ ? std::optional<int>(*b_) : std::nullopt; }
    // Residue payload.
    int residue_r() const { return a_; }
    int residue_m() const { return *b_; }
    // ComplementRange payload.
    int m1() const { return a_; }
    int m2() const { return *b_; }

    // Membership in the untruncated denotation (complements read as
    // "all positive integers except X").
    bool member(int a) const;

    // True when the denotation is a fixed finite set (Explicit, bounded
    // Range) independent of any materialization bound.
    bool finite() const;

    // Canonical text form; parse_set(to_spec()) reproduces the value.
    std::string to_spec() const;

private:
    PartSet(SetKind kind, std::vector<int> values, int a, std::optional<int> b)
        : kind_(kind), values_(std::move(values)), a_(a), b_(b) {}

    SetKind kind_;
    std::vector<int> values_;  // Explicit / ComplementSet
    int a_ = 0;                // lo / r / m1
    std::optional<int> b_;     // hi / m / m2
};

// Parses the set-specification mini-grammar:
//   {a,b,...} | lo..hi | lo.. | mod(r,m) | not{a,b,...} | not(m1..m2)
// Throws parse_error (position-annotated) on syntax or semantic violations.
PartSet parse_set(std::string_view spec);

// v^{S<=n}: members of S that are <= n, strictly increasing. Empty when
// S<=n is empty.
PartVector materialize(const PartSet& s, int n);

// a in S<=n.
bool contains(const PartSet& s, int a, int n);

}  // namespace scomp

#endif

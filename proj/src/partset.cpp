#include "scomp/partset.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "scomp/errors.hpp"

namespace scomp {

namespace {

void require_strictly_increasing(const std::vector<int>& values, const char* what) {
    if (values.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    int prev = 0;
    for (int v : values) {
        if (v < 1) throw std::invalid_argument(std::string(what) + ": values must be >= 1");
        if (v <= prev) throw std::invalid_argument(std::string(what) + ": list must be strictly increasing");
        prev = v;
    }
}

}  // namespace

PartSet PartSet::explicit_set(std::vector<int> values) {
    require_strictly_increasing(values, "explicit set");
    return PartSet(SetKind::Explicit, std::move(values), 0, std::nullopt);
}

PartSet PartSet::range(int lo, std::optional<int> hi) {
    if (lo < 1) throw std::invalid_argument("range: lo must be >= 1");
    if (hi && *hi < lo) throw std::invalid_argument("range: hi must be >= lo");
    return PartSet(SetKind::Range, {}, lo, hi);
}

PartSet PartSet::residue(int r, int m) {
    if (r < 1 || m < 1) throw std::invalid_argument("residue: r and m must be >= 1");
    if (r > m) throw std::invalid_argument("residue: r must be <= m");
    return PartSet(SetKind::Residue, {}, r, m);
}

PartSet PartSet::complement_set(std::vector<int> excluded) {
    require_strictly_increasing(excluded, "complement set");
    return PartSet(SetKind::ComplementSet, std::move(excluded), 0, std::nullopt);
}

PartSet PartSet::complement_range(int m1, int m2) {
    if (m1 < 1) throw std::invalid_argument("complement range: m1 must be >= 1");
    if (m2 < m1) throw std::invalid_argument("complement range: m2 must be >= m1");
    return PartSet(SetKind::ComplementRange, {}, m1, m2);
}

bool PartSet::member(int a) const {
    if (a < 1) return false;
    switch (kind_) {
        case SetKind::Explicit:
            return std::binary_search(values_.begin(), values_.end(), a);
        case SetKind::Range:
            return a >= a_ && (!b_ || a <= *b_);
        case SetKind::Residue:
            return a % *b_ == a_ % *b_;
        case SetKind::ComplementSet:
            return !std::binary_search(values_.begin(), values_.end(), a);
        case SetKind::ComplementRange:
            return a < a_ || a > *b_;
    }
    return false;
}

bool PartSet::finite() const {
    switch (kind_) {
        case SetKind::Explicit: return true;
        case SetKind::Range: return b_.has_value();
        default: return false;
    }
}

std::string PartSet::to_spec() const {
    std::ostringstream out;
    switch (kind_) {
        case SetKind::Explicit:
        case SetKind::ComplementSet: {
            if (kind_ == SetKind::ComplementSet) out << "not";
            out << '{';
            for (std::size_t i = 0; i < values_.size(); ++i) {
                if (i != 0) out << ',';
                out << values_[i];
            }
            out << '}';
            break;
        }
        case SetKind::Range:
            out << a_ << "..";
            if (b_) out << *b_;
            break;
        case SetKind::Residue:
            out << "mod(" << a_ << ',' << *b_ << ')';
            break;
        case SetKind::ComplementRange:
            out << "not(" << a_ << ".." << *b_ << ')';
            break;
    }
    return out.str();
}

namespace {

// Single-pass scanner over the specification grammar.
class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    PartSet parse() {
        skip_ws();
        PartSet result = parse_variant();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters after set specification");
        return result;
    }

private:
    PartSet parse_variant() {
        if (eof()) fail("empty set specification");
        char c = peek();
        if (c == '{') return finish_explicit(false);
        if (std::isdigit(static_cast<unsigned char>(c))) return finish_range();
        if (match_word("mod")) return finish_residue();
        if (match_word("not")) {
            skip_ws();
            if (eof()) fail("expected '{' or '(' after 'not'");
            if (peek() == '{') return finish_explicit(true);
            if (peek() == '(') return finish_complement_range();
            fail("expected '{' or '(' after 'not'");
        }
        fail("expected '{', a number, 'mod', or 'not'");
    }

    PartSet finish_explicit(bool complement) {
        expect('{');
        std::vector<int> values;
        std::size_t list_pos = pos_;
        while (true) {
            skip_ws();
            values.push_back(parse_number());
            skip_ws();
            if (eof()) fail("unterminated list: expected ',' or '}'");
            if (peek() == ',') { ++pos_; continue; }
            if (peek() == '}') { ++pos_; break; }
            fail("expected ',' or '}' in list");
        }
        try {
            return complement ? PartSet::complement_set(std::move(values))
                              : PartSet::explicit_set(std::move(values));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), list_pos);
        }
    }

    PartSet finish_range() {
        std::size_t start = pos_;
        int lo = parse_number();
        expect('.');
        expect('.');
        std::optional<int> hi;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) hi = parse_number();
        try {
            return PartSet::range(lo, hi);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), start);
        }
    }

    PartSet finish_residue() {
        std::size_t start = pos_;
        expect('(');
        skip_ws();
        int r = parse_number();
        skip_ws();
        expect(',');
        skip_ws();
        int m = parse_number();
        skip_ws();
        expect(')');
        try {
            return PartSet::residue(r, m);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), start);
        }
    }

    PartSet finish_complement_range() {
        std::size_t start = pos_;
        expect('(');
        skip_ws();
        int m1 = parse_number();
        skip_ws();
        expect('.');
        expect('.');
        skip_ws();
        int m2 = parse_number();
        skip_ws();
        expect(')');
        try {
            return PartSet::complement_range(m1, m2);
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what(), start);
        }
    }

    int parse_number() {
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number");
        std::size_t start = pos_;
        long long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000LL) throw parse_error("number out of range", start);
            ++pos_;
        }
        if (value == 0) throw parse_error("values must be >= 1", start);
        return static_cast<int>(value);
    }

    bool match_word(std::string_view word) {
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const {
        throw parse_error(message, pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

PartSet parse_set(std::string_view spec) { return SpecParser(spec).parse(); }

PartVector materialize(const PartSet& s, int n) {
    if (n < 0) throw std::invalid_argument("materialize: n must be >= 0");
    PartVector out;
    switch (s.kind()) {
        case SetKind::Explicit:
            for (int v : s.values())
                if (v <= n) out.push_back(v);
            break;
        case SetKind::Range: {
            int hi = s.hi() ? std::min(*s.hi(), n) : n;
            for (int v = s.lo(); v <= hi; ++v) out.push_back(v);
            break;
        }
        case SetKind::Residue:
            for (int v = s.residue_r(); v <= n; v += s.residue_m()) out.push_back(v);
            break;
        case SetKind::ComplementSet:
        case SetKind::ComplementRange:
            for (int v = 1; v <= n; ++v)
                if (s.member(v)) out.push_back(v);
            break;
    }
    return out;
}

bool contains(const PartSet& s, int a, int n) {
    if (a < 1 || n < 0) throw std::invalid_argument("contains: a must be >= 1 and n >= 0");
    return a <= n && s.member(a);
}

}  // namespace scomp

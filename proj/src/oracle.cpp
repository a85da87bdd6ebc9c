#include "scomp/oracle.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

#include "scomp/errors.hpp"

namespace scomp {

namespace {

void enumerate_into(const PartSet& s, int remaining, Composition& prefix,
                    std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part : materialize(s, remaining)) {
        prefix.push_back(part);
        enumerate_into(s, remaining - part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> enumerate(const PartSet& s, int n, std::uint64_t ceiling) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    BigInt total = count_brute(s, n);
    if (total > ceiling)
        throw limit_error("enumeration of " + total.str() + " compositions exceeds the ceiling of " +
                          std::to_string(ceiling));
    std::vector<Composition> out;
    out.reserve(static_cast<std::size_t>(total));
    Composition prefix;
    enumerate_into(s, n, prefix, out);
    return out;
}

BigInt count_brute(const std::function<bool(int)>& member, int n) {
    if (n < 0) throw std::invalid_argument("count_brute: n must be >= 0");
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1);
    counts[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt total = 0;
        for (int part = 1; part <= m; ++part)
            if (member(part)) total += counts[m - part];
        counts[m] = std::move(total);
    }
    return counts[n];
}

BigInt count_brute(const PartSet& s, int n) {
    return count_brute([&s](int part) { return s.member(part); }, n);
}

std::set<Composition> build_next_level(const PartSet& s, int i,
                                       const std::map<int, std::set<Composition>>& prior) {
    if (i < 1) throw std::invalid_argument("build_next_level: i must be >= 1");

    auto level = [&prior](int j) -> const std::set<Composition>& {
        auto it = prior.find(j);
        if (it == prior.end())
            throw std::invalid_argument("build_next_level: missing prior level " + std::to_string(j));
        return it->second;
    };

    std::set<Composition> result;
    if (i != 1) {
        for (const Composition& c : level(i - 1)) {
            if (c.empty()) continue;
            int bumped = c.front() + 1;
            if (s.member(bumped)) {
                Composition next = c;
                next.front() = bumped;
                result.insert(std::move(next));
            }
        }
    }
    for (int part : materialize(s, i)) {
        if (s.member(part - 1)) continue;
        for (const Composition& c : level(i - part)) {
            Composition next;
            next.reserve(c.size() + 1);
            next.push_back(part);
            next.insert(next.end(), c.begin(), c.end());
            result.insert(std::move(next));
        }
    }
    return result;
}

std::set<Composition> window_generate(const PartSet& s, int n) {
    if (!s.finite())
        throw unsupported_error("window_generate requires a fixed finite set");
    int max_part = s.kind() == SetKind::Explicit ? s.values().back() : *s.hi();
    if (n < max_part) throw std::invalid_argument("window_generate: n must be >= max(S)");
    PartVector parts = materialize(s, n);
    int threshold = n - (max_part - 1);

    // Tuples are emitted once their sum reaches the window and still grown
    // while a child stays <= n; stopping growth at the threshold would lose
    // window members reachable only through other window members.
    std::set<Composition> result;
    std::deque<std::pair<Composition, int>> queue;
    for (int part : parts) queue.emplace_back(Composition{part}, part);
    while (!queue.empty()) {
        auto [tuple, sum] = std::move(queue.front());
        queue.pop_front();
        if (sum >= threshold) result.insert(tuple);
        for (int part : parts) {
            if (sum + part > n) break;
            Composition child;
            child.reserve(tuple.size() + 1);
            child.push_back(part);
            child.insert(child.end(), tuple.begin(), tuple.end());
            queue.emplace_back(std::move(child), sum + part);
        }
    }
    return result;
}

}  // namespace scomp

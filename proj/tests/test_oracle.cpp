#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "scomp/errors.hpp"
#include "scomp/oracle.hpp"

using namespace scomp;

namespace {

std::set<Composition> as_set(const std::vector<Composition>& list) {
    return {list.begin(), list.end()};
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("enumerate lists compositions in lexicographic order") {
    CHECK(enumerate(parse_set("{1,2}"), 3) ==
          std::vector<Composition>{{1, 1, 1}, {1, 2}, {2, 1}});
    CHECK(enumerate(parse_set("{2,3}"), 7) ==
          std::vector<Composition>{{2, 2, 3}, {2, 3, 2}, {3, 2, 2}});
    CHECK(enumerate(parse_set("{3,5}"), 0) == std::vector<Composition>{{}});
    CHECK(enumerate(parse_set("mod(2,3)"), 0) == std::vector<Composition>{{}});
}

TEST_CASE("enumerate refuses to materialize past the ceiling") {
    CHECK_THROWS_AS(enumerate(parse_set("{1,2}"), 40, 1000), limit_error);
    CHECK(enumerate(parse_set("{1,2}"), 10, 1000).size() == 89);
}

TEST_CASE("count_brute on the worked examples") {
    CHECK(count_brute(parse_set("{1,2}"), 5) == 8);
    CHECK(count_brute(parse_set("{2,4}"), 5) == 0);
    CHECK(count_brute(parse_set("not{2}"), 5) == 7);
    CHECK(count_brute(parse_set("{1,2}"), 0) == 1);
}

TEST_CASE("enumerations are duplicate-free and sum to n with parts in the set") {
    for (const PartSet& s : testing::battery_sets()) {
        for (int n = 0; n <= 11; ++n) {
            auto list = enumerate(s, n);
            CHECK(as_set(list).size() == list.size());
            for (const Composition& c : list) {
                CHECK(std::accumulate(c.begin(), c.end(), 0) == n);
                for (int part : c) CHECK(contains(s, part, n));
            }
            CHECK(count_brute(s, n) == list.size());
        }
    }
}

TEST_CASE("build_next_level on the worked examples") {
    PartSet one_two = parse_set("{1,2}");
    std::map<int, std::set<Composition>> prior;
    prior[0] = {Composition{}};
    CHECK(build_next_level(one_two, 1, prior) == std::set<Composition>{{1}});
    prior[1] = {{1}};
    CHECK(build_next_level(one_two, 2, prior) == std::set<Composition>{{2}, {1, 1}});

    PartSet two_three = parse_set("{2,3}");
    std::map<int, std::set<Composition>> prior23;
    prior23[0] = {Composition{}};
    prior23[1] = {};
    CHECK(build_next_level(two_three, 2, prior23) == std::set<Composition>{{2}});
}

TEST_CASE("build_next_level requires the prior levels it reads") {
    // For {2,3} at i = 2, step (b) prepends 2 to the compositions of 0;
    // level 0 is absent here.
    std::map<int, std::set<Composition>> prior;
    prior[1] = {};
    CHECK_THROWS_AS(build_next_level(parse_set("{2,3}"), 2, prior), std::invalid_argument);
}

TEST_CASE("chaining build_next_level reproduces the full enumeration") {
    for (const PartSet& s : testing::battery_sets()) {
        std::map<int, std::set<Composition>> levels;
        levels[0] = {Composition{}};
        for (int i = 1; i <= 10; ++i) {
            levels[i] = build_next_level(s, i, levels);
            CHECK(levels[i] == as_set(enumerate(s, i)));
        }
    }
}

TEST_CASE("window_generate on the worked examples") {
    CHECK(window_generate(parse_set("{1,2}"), 2) ==
          std::set<Composition>{{1}, {2}, {1, 1}});
    CHECK(window_generate(parse_set("{2}"), 6) == std::set<Composition>{{2, 2, 2}});
    CHECK(window_generate(parse_set("{1}"), 3) == std::set<Composition>{{1, 1, 1}});
}

TEST_CASE("window_generate equals the union of the windowed enumerations") {
    for (const char* spec : {"{1,2}", "{2,3}", "{3,5}", "{1,4}", "1..3", "2..5"}) {
        PartSet s = parse_set(spec);
        int max_part = s.kind() == SetKind::Explicit ? s.values().back() : *s.hi();
        for (int n = max_part; n <= max_part + 8; ++n) {
            std::set<Composition> expected;
            for (int i = n - (max_part - 1); i <= n; ++i)
                for (const Composition& c : enumerate(s, i)) expected.insert(c);
            CHECK(window_generate(s, n) == expected);
        }
    }
}

TEST_CASE("window_generate rejects unbounded sets and undersized n") {
    CHECK_THROWS_AS(window_generate(parse_set("mod(1,2)"), 8), unsupported_error);
    CHECK_THROWS_AS(window_generate(parse_set("2.."), 8), unsupported_error);
    CHECK_THROWS_AS(window_generate(parse_set("{3,5}"), 4), std::invalid_argument);
}

TEST_SUITE_END();

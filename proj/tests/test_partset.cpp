#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "scomp/errors.hpp"
#include "scomp/partset.hpp"

using namespace scomp;

TEST_SUITE_BEGIN("partset");

TEST_CASE("parse_set recognizes every variant") {
    CHECK(parse_set("{3,5}").kind() == SetKind::Explicit);
    CHECK(parse_set("{3,5}").values() == std::vector<int>{3, 5});

    PartSet residue = parse_set("mod(1,2)");
    CHECK(residue.kind() == SetKind::Residue);
    CHECK(residue.residue_r() == 1);
    CHECK(residue.residue_m() == 2);

    PartSet complement = parse_set("not(2..3)");
    CHECK(complement.kind() == SetKind::ComplementRange);
    CHECK(complement.m1() == 2);
    CHECK(complement.m2() == 3);

    PartSet bounded = parse_set("2..7");
    CHECK(bounded.kind() == SetKind::Range);
    CHECK(bounded.lo() == 2);
    CHECK(bounded.hi() == 7);

    PartSet unbounded = parse_set("4..");
    CHECK(unbounded.kind() == SetKind::Range);
    CHECK_FALSE(unbounded.hi().has_value());

    CHECK(parse_set("not{2,5}").kind() == SetKind::ComplementSet);
    CHECK(parse_set(" { 1 , 2 } ").values() == std::vector<int>{1, 2});
}

TEST_CASE("parse_set rejects malformed input with a position") {
    CHECK_THROWS_AS(parse_set(""), parse_error);
    CHECK_THROWS_AS(parse_set("{1,2"), parse_error);
    CHECK_THROWS_AS(parse_set("{}"), parse_error);
    CHECK_THROWS_AS(parse_set("{5,3}"), parse_error);   // non-increasing
    CHECK_THROWS_AS(parse_set("{1,1}"), parse_error);   // duplicate
    CHECK_THROWS_AS(parse_set("mod(3,2)"), parse_error);  // r > m
    CHECK_THROWS_AS(parse_set("mod(0,2)"), parse_error);
    CHECK_THROWS_AS(parse_set("not()"), parse_error);
    CHECK_THROWS_AS(parse_set("3..2"), parse_error);
    CHECK_THROWS_AS(parse_set("{1,2}junk"), parse_error);
    CHECK_THROWS_AS(parse_set("banana"), parse_error);

    try {
        parse_set("{1,x}");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("materialize truncates each variant at n") {
    CHECK(materialize(parse_set("mod(1,2)"), 6) == PartVector{1, 3, 5});
    CHECK(materialize(parse_set("{3,5}"), 2).empty());
    CHECK(materialize(parse_set("not(2..3)"), 5) == PartVector{1, 4, 5});
    CHECK(materialize(parse_set("2.."), 4) == PartVector{2, 3, 4});
    CHECK(materialize(parse_set("not{2}"), 4) == PartVector{1, 3, 4});
    CHECK(materialize(parse_set("{1,2}"), 0).empty());
}

TEST_CASE("contains matches the truncated denotation") {
    CHECK(contains(parse_set("mod(2,3)"), 8, 10));
    CHECK_FALSE(contains(parse_set("not{2}"), 2, 9));
    CHECK_FALSE(contains(parse_set("2.."), 1, 9));
    CHECK(contains(parse_set("2.."), 9, 9));
    CHECK_FALSE(contains(parse_set("2.."), 10, 9));  // above the cutoff
}

TEST_CASE("membership agrees with materialization everywhere in range") {
    for (const PartSet& s : testing::battery_sets()) {
        for (int n = 0; n <= 12; ++n) {
            PartVector parts = materialize(s, n);
            std::size_t idx = 0;
            for (int a = 1; a <= n; ++a) {
                bool in = idx < parts.size() && parts[idx] == a;
                if (in) ++idx;
                CHECK(contains(s, a, n) == in);
            }
            CHECK(idx == parts.size());
        }
    }
}

TEST_CASE("materializations grow monotonically for n-independent variants") {
    for (const char* spec : {"{1,2}", "{3,5}", "2..6", "2..", "mod(2,3)"}) {
        PartSet s = parse_set(spec);
        for (int n = 0; n < 12; ++n) {
            PartVector small = materialize(s, n);
            PartVector large = materialize(s, n + 1);
            CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }
}

TEST_CASE("canonical text round-trips") {
    for (const char* spec :
         {"{3,5}", "{1,2,9}", "1..4", "7..", "mod(1,2)", "mod(3,7)", "not{2}", "not{2,5}",
          "not(2..4)"}) {
        PartSet parsed = parse_set(spec);
        CHECK(parsed.to_spec() == spec);
        CHECK(parse_set(parsed.to_spec()).to_spec() == parsed.to_spec());
    }
    CHECK(parse_set("  {1, 2}").to_spec() == "{1,2}");
}

TEST_SUITE_END();

#include <doctest.h>

#include "helpers.hpp"
#include "scomp/closedforms.hpp"
#include "scomp/errors.hpp"
#include "scomp/oracle.hpp"
#include "scomp/sequences.hpp"

using namespace scomp;

TEST_SUITE_BEGIN("closedforms");

TEST_CASE("count_two_part on the worked examples") {
    CHECK(count_two_part(1, 2, 4) == 5);
    CHECK(count_two_part(2, 3, 7) == 3);
    CHECK(count_two_part(2, 4, 5) == 0);
    CHECK_THROWS_AS(count_two_part(3, 3, 5), std::invalid_argument);
}

TEST_CASE("count_two_part equals the oracle over a parameter grid") {
    for (int a1 = 1; a1 <= 5; ++a1)
        for (int a2 = a1 + 1; a2 <= 7; ++a2) {
            PartSet s = PartSet::explicit_set({a1, a2});
            for (int n = 0; n <= 24; ++n) CHECK(count_two_part(a1, a2, n) == count_brute(s, n));
        }
}

TEST_CASE("count_residue on the worked examples") {
    CHECK(count_residue(1, 2, 5) == 5);
    CHECK(count_residue(2, 3, 9) == 3);
    CHECK(count_residue(1, 2, 1) == 1);
}

TEST_CASE("count_residue equals the oracle, including r = m") {
    for (int m = 1; m <= 5; ++m)
        for (int r = 1; r <= m; ++r) {
            PartSet s = PartSet::residue(r, m);
            for (int n = 0; n <= 24; ++n) CHECK(count_residue(r, m, n) == count_brute(s, n));
        }
}

TEST_CASE("count_residue of the odd parts follows the Fibonacci numbers") {
    // Empirically the count at n is the nth Fibonacci number under the
    // 1, 1, 2, ... indexing, i.e. m_fibonacci(2, n).
    for (int n = 1; n <= 24; ++n)
        CHECK(count_residue(1, 2, n) == m_fibonacci(2, n, Method::Recurrence));
}

TEST_CASE("count_up_to_m on the worked examples") {
    CHECK(count_up_to_m(3, 4) == 7);
    CHECK(count_up_to_m(5, 5) == 16);
    CHECK(count_up_to_m(9, 5) == 16);
    CHECK(count_up_to_m(1, 4) == 1);
}

TEST_CASE("count_up_to_m equals the oracle and the all-compositions power") {
    for (int m = 1; m <= 6; ++m) {
        PartSet s = PartSet::range(1, m);
        for (int n = 0; n <= 24; ++n) CHECK(count_up_to_m(m, n) == count_brute(s, n));
    }
    for (int n = 1; n <= 16; ++n)
        for (int m = n; m <= n + 2; ++m)
            CHECK(count_up_to_m(m, n) == int_pow(BigInt(2), n - 1));
}

TEST_CASE("count_from_m on the worked examples") {
    CHECK(count_from_m(2, 5) == 3);
    CHECK(count_from_m(1, 6) == 32);
    CHECK(count_from_m(6, 5) == 0);
}

TEST_CASE("count_from_m equals the oracle") {
    for (int m = 1; m <= 6; ++m) {
        PartSet s = PartSet::range(m, std::nullopt);
        for (int n = 0; n <= 24; ++n) CHECK(count_from_m(m, n) == count_brute(s, n));
    }
}

TEST_CASE("count_without_m on the worked examples") {
    CHECK(count_without_m(2, 5) == 7);
    CHECK(count_without_m(1, 5) == 3);
    CHECK(count_without_m(7, 5) == 16);
}

TEST_CASE("count_without_m equals the oracle") {
    for (int m = 1; m <= 7; ++m) {
        PartSet s = PartSet::complement_set({m});
        for (int n = 0; n <= 24; ++n) CHECK(count_without_m(m, n) == count_brute(s, n));
    }
}

TEST_CASE("excluding a value above n leaves all compositions") {
    for (int n = 1; n <= 14; ++n)
        for (int m = n + 1; m <= n + 3; ++m)
            CHECK(count_without_m(m, n) == int_pow(BigInt(2), n - 1));
}

TEST_CASE("count_without_range on the worked examples") {
    CHECK(count_without_range(2, 3, 5) == 4);
    CHECK(count_without_range(3, 4, 6) == count_brute(parse_set("not(3..4)"), 6));
    for (int k = 5; k <= 8; ++k) CHECK(count_without_range(1, k, 5) == 0);
}

TEST_CASE("count_without_range equals the oracle over a parameter grid") {
    for (int m1 = 1; m1 <= 5; ++m1)
        for (int m2 = m1; m2 <= 7; ++m2) {
            PartSet s = PartSet::complement_range(m1, m2);
            for (int n = 0; n <= 24; ++n)
                CHECK(count_without_range(m1, m2, n) == count_brute(s, n));
        }
}

TEST_CASE("classify_family matches exactly the supported shapes") {
    CHECK(classify_family(parse_set("{2,5}"))->family == FamilyKind::TwoPart);
    CHECK(classify_family(parse_set("1..4"))->family == FamilyKind::UpToM);
    CHECK(classify_family(parse_set("3.."))->family == FamilyKind::FromM);
    CHECK(classify_family(parse_set("1.."))->family == FamilyKind::FromM);
    CHECK(classify_family(parse_set("mod(2,3)"))->family == FamilyKind::Residue);
    CHECK(classify_family(parse_set("not{4}"))->family == FamilyKind::WithoutM);
    CHECK(classify_family(parse_set("not(2..4)"))->family == FamilyKind::WithoutRange);
    CHECK_FALSE(classify_family(parse_set("{1,2,3}")).has_value());
    CHECK_FALSE(classify_family(parse_set("{5}")).has_value());
    CHECK_FALSE(classify_family(parse_set("2..6")).has_value());
    CHECK_FALSE(classify_family(parse_set("not{2,5}")).has_value());
    CHECK_THROWS_AS(count_closed(parse_set("{5}"), 4), unsupported_error);
}

TEST_SUITE_END();

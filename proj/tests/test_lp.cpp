#include <doctest.h>

#include "test_util.hpp"

using namespace testutil;

TEST_CASE("box minimum with dual certificate") {
    HPoly sq = unit_square();
    LPResult r = lp_solve(v({1, 0}), Sense::Min, sq);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rat(0));
    CHECK(contains(sq, r.point));
    CHECK(lp_certificate_ok(v({1, 0}), Sense::Min, sq, r));
}

TEST_CASE("maximization over the box") {
    HPoly sq = unit_square();
    LPResult r = lp_solve(v({1, 1}), Sense::Max, sq);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rat(2));
    CHECK(r.point == v({1, 1}));
    CHECK(lp_certificate_ok(v({1, 1}), Sense::Max, sq, r));
}

TEST_CASE("contradictory bounds yield a Farkas certificate") {
    // x <= -1 and x >= 1
    HPoly p = hp(1, {row({1}, -1), row({-1}, -1)});
    LPResult r = lp_solve(v({0}), Sense::Min, p);
    REQUIRE(r.status == LPStatus::Infeasible);
    CHECK(lp_certificate_ok(v({0}), Sense::Min, p, r));
    // the certificate really combines the rows into 0 <= negative
    REQUIRE(r.farkas.size() == 2);
    CHECK(r.farkas[0] >= 0);
    CHECK(r.farkas[1] >= 0);
    CHECK(r.farkas[0] * Rat(1) + r.farkas[1] * Rat(-1) == 0);
    CHECK(r.farkas[0] * Rat(-1) + r.farkas[1] * Rat(-1) < 0);
}

TEST_CASE("half line is unbounded with an improving ray") {
    HPoly p = at_least(0);
    LPResult r = lp_solve(v({-1}), Sense::Min, p);
    REQUIRE(r.status == LPStatus::Unbounded);
    CHECK(contains(p, r.point));
    CHECK(in_recession_cone(p, r.ray));
    CHECK(dot(v({-1}), r.ray) < 0);
    CHECK(lp_certificate_ok(v({-1}), Sense::Min, p, r));
}

TEST_CASE("equality constraints enter the dual") {
    // min x1 + x2 over the simplex x1 + x2 = 1, x >= 0
    HPoly p = hp(2, {row({-1, 0}, 0), row({0, -1}, 0)}, {row({1, 1}, 1)});
    LPResult r = lp_solve(v({1, 1}), Sense::Min, p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rat(1));
    CHECK(lp_certificate_ok(v({1, 1}), Sense::Min, p, r));

    LPResult s = lp_solve(v({1, -1}), Sense::Max, p);
    REQUIRE(s.status == LPStatus::Optimal);
    CHECK(s.value == Rat(1));
    CHECK(s.point == v({1, 0}));
}

TEST_CASE("rational data stays exact") {
    // min x over {x >= 1/3}; the answer must be exactly 1/3, not a float
    HPoly p = hp(1, {rowq({"-1"}, "-1/3")});
    LPResult r = lp_solve(v({1}), Sense::Min, p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == make_rat(1, 3));
    CHECK(r.point == vq({"1/3"}));
}

TEST_CASE("solver is deterministic") {
    HPoly p = hp(2, {row({1, 2}, 3), row({-1, 1}, 1), row({0, -1}, 0), row({-1, -1}, 0)});
    Vec c = v({2, -3});
    LPResult a = lp_solve(c, Sense::Min, p);
    LPResult b = lp_solve(c, Sense::Min, p);
    CHECK(a.status == b.status);
    CHECK(a.value == b.value);
    CHECK(a.point == b.point);
    CHECK(a.dual == b.dual);
}

TEST_CASE("objective dimension is checked") {
    CHECK(error_name_of([] { lp_solve(Vec{Rat(1)}, Sense::Min, unit_square()); }) ==
          "DimensionMismatch");
}

TEST_CASE("degenerate vertices do not cycle") {
    // four planes through the origin make the vertex heavily degenerate
    HPoly p = hp(3, {row({-1, 0, 0}, 0), row({0, -1, 0}, 0), row({0, 0, -1}, 0),
                     row({-1, -1, -1}, 0), row({1, 1, 1}, 1)});
    LPResult r = lp_solve(v({1, 1, 1}), Sense::Min, p);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == Rat(0));
    CHECK(lp_certificate_ok(v({1, 1, 1}), Sense::Min, p, r));
}

#include <doctest.h>

#include "test_util.hpp"

using namespace testutil;

TEST_CASE("vector arithmetic") {
    Vec a = v({1, 2}), b = v({3, -1});
    CHECK(dot(a, b) == Rat(1));
    CHECK(add(a, b) == v({4, 1}));
    CHECK(sub(a, b) == v({-2, 3}));
    CHECK(scale(make_rat(1, 2), a) == vq({"1/2", "1"}));
    CHECK(neg(a) == v({-1, -2}));
    CHECK(is_zero(zero_vec(3)));
    CHECK_FALSE(is_zero(unit_vec(3, 1)));
    CHECK(error_name_of([&] { dot(a, v({1})); }) == "DimensionMismatch");
}

TEST_CASE("rank on exact data") {
    CHECK(rank(Mat::identity(3)) == 3);
    CHECK(rank(Mat(2, 4)) == 0);
    CHECK(rank(mat_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(mat_rows({{1, 2}, {2, 5}})) == 2);
    // rank is invariant under transpose
    Mat m = mat_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank(m) == rank(transpose(m)));
    CHECK(rank(m) == 2);
}

TEST_CASE("nullspace spans the kernel") {
    Mat m = mat_rows({{1, 2}});
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(is_zero(mat_vec(m, basis[0])));

    Mat sq = mat_rows({{1, 0, 1}, {0, 1, 1}});
    auto b2 = nullspace(sq);
    REQUIRE(b2.size() == 1);
    CHECK(is_zero(mat_vec(sq, b2[0])));

    CHECK(nullspace(Mat::identity(3)).empty());
    CHECK(nullspace(Mat(0, 2)).size() == 2);
}

TEST_CASE("matrix products agree with transpose") {
    Mat m = mat_rows({{1, 2, 0}, {0, -1, 3}});
    Vec x = v({1, 1, 1});
    CHECK(mat_vec(m, x) == v({3, 2}));
    Vec y = v({2, -1});
    CHECK(mat_t_vec(m, y) == mat_vec(transpose(m), y));
}

TEST_CASE("row echelon reports pivot columns") {
    Mat m = mat_rows({{0, 1, 2}, {0, 2, 4}, {1, 0, 0}});
    auto pivots = row_echelon(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
}

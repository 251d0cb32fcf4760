#include <doctest.h>

#include "test_util.hpp"

using namespace testutil;

namespace {

// Projection computed on the generator side, for cross-checking fm_eliminate.
HPoly project_via_dd(const HPoly& p, const std::vector<std::size_t>& drop) {
    GenSet g = dd_convert(p);
    std::vector<bool> dropped(static_cast<std::size_t>(p.dim), false);
    for (auto i : drop) dropped[i] = true;
    auto shrink = [&](const Vec& x) {
        Vec r;
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!dropped[i]) r.push_back(x[i]);
        return r;
    };
    GenSet out;
    out.dim = p.dim - static_cast<int>(drop.size());
    for (const auto& x : g.points) out.points.push_back(shrink(x));
    for (const auto& x : g.rays) {
        Vec r = shrink(x);
        if (!is_zero(r)) out.rays.push_back(r);
    }
    for (const auto& x : g.lines) {
        Vec r = shrink(x);
        if (!is_zero(r)) out.lines.push_back(r);
    }
    return dd_reverse(out);
}

} // namespace

TEST_CASE("projecting the identity graph recovers the domain") {
    HPoly p = hp(2, {row({-1, 0}, 0), row({1, 0}, 1)}, {row({1, -1}, 0)});
    CHECK(eq(fm_eliminate(p, {1}), interval(0, 1)));
}

TEST_CASE("unbounded partner coordinate absorbs same-signed constraints") {
    // y appears with one sign only, so no combination survives
    HPoly p = hp(2, {row({1, 1}, 1), row({2, 1}, 3)});
    CHECK(eq(fm_eliminate(p, {1}), HPoly::whole_space(1)));

    // opposite signs on y leave the classical combined row x <= 1
    HPoly q = hp(2, {row({1, 1}, 1), row({1, -1}, 1)});
    CHECK(eq(fm_eliminate(q, {1}), at_most(1)));
}

TEST_CASE("equalities are pivoted away before elimination") {
    HPoly p = hp(2, {row({0, -1}, 0), row({0, 1}, 1)}, {row({1, -2}, 0)}); // x = 2y, 0<=y<=1
    CHECK(eq(fm_eliminate(p, {1}), interval(0, 2)));
}

TEST_CASE("dropping several coordinates at once") {
    // simplex in R^3 projected to the x1 axis
    HPoly simplex = hp(3, {row({-1, 0, 0}, 0), row({0, -1, 0}, 0), row({0, 0, -1}, 0),
                           row({1, 1, 1}, 1)});
    CHECK(eq(fm_eliminate(simplex, {1, 2}), interval(0, 1)));

    // dropping everything leaves the nonempty zero-dimensional space
    HPoly all = fm_eliminate(simplex, {0, 1, 2});
    CHECK(all.dim == 0);
    CHECK_FALSE(is_empty(all));
}

TEST_CASE("projection of the empty set is empty") {
    CHECK(is_empty(fm_eliminate(HPoly::empty(3), {1})));
    HPoly e = fm_eliminate(HPoly::empty(2), {0, 1});
    CHECK(e.dim == 0);
    CHECK(is_empty(e));
}

TEST_CASE("projection matches the generator-side oracle") {
    std::vector<std::pair<HPoly, std::vector<std::size_t>>> cases = {
        {unit_square(), {0}},
        {hp(2, {row({1, 1}, 1)}, {}), {1}},
        {hp(3, {row({1, 1, 0}, 2), row({-1, 0, 1}, 0), row({0, -1, 0}, 0)}, {row({1, 0, -1}, 1)}), {2}},
        {hp(3, {row({1, 1, 1}, 3), row({-1, -1, -1}, 3)}, {}), {0, 2}},
    };
    for (auto& [p, drop] : cases) {
        CHECK(eq(fm_eliminate(p, drop), project_via_dd(p, drop)));
    }
}

TEST_CASE("random projections match the generator-side oracle") {
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        int dim = 2 + static_cast<int>(rng.below(3));
        HPoly p = random_polyhedron(rng, dim);
        std::size_t dropped = 1 + rng.below(static_cast<std::uint64_t>(dim - 1));
        std::vector<std::size_t> all(static_cast<std::size_t>(dim));
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        for (std::size_t j = 0; j < dropped; ++j)
            std::swap(all[j], all[j + rng.below(all.size() - j)]);
        std::vector<std::size_t> drop(all.begin(), all.begin() + static_cast<long>(dropped));
        CHECK(eq(fm_eliminate(p, drop), project_via_dd(p, drop)));
    }
}

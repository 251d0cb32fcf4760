#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"

using namespace testutil;

TEST_CASE("unit square converts to its four vertices") {
    GenSet g = dd_convert(unit_square());
    CHECK(g.rays.empty());
    CHECK(g.lines.empty());
    for (Vec p : {v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})}) {
        CHECK(std::find(g.points.begin(), g.points.end(), p) != g.points.end());
    }
    CHECK(eq(g, unit_square()));
}

TEST_CASE("half plane needs a ray and a line") {
    HPoly half = hp(2, {row({0, -1}, 0)}); // x2 >= 0
    GenSet g = dd_convert(half);
    CHECK(eq(g, gens(2, {v({0, 0})}, {v({0, 1})}, {v({1, 0})})));
    CHECK_FALSE(g.lines.empty());
}

TEST_CASE("cone generators reverse to half spaces") {
    GenSet c = gens(2, {v({0, 0})}, {v({1, 0}), v({1, 1})});
    HPoly h = dd_reverse(c);
    CHECK(eq(h, hp(2, {row({0, -1}, 0), row({-1, 1}, 0)}))); // x2 >= 0, x1 >= x2
}

TEST_CASE("empty sets cross the conversion both ways") {
    GenSet g = dd_convert(HPoly::empty(2));
    CHECK(g.is_empty_set());
    CHECK(g.rays.empty());
    CHECK(g.lines.empty());
    CHECK(is_empty(dd_reverse(GenSet{3, {}, {}, {}})));
}

TEST_CASE("whole space and single points") {
    GenSet whole = dd_convert(HPoly::whole_space(2));
    CHECK(eq(whole, HPoly::whole_space(2)));
    CHECK(whole.points.size() == 1);

    HPoly pt = hp(2, {}, {row({1, 0}, 2), row({0, 1}, -1)});
    GenSet g = dd_convert(pt);
    CHECK(g.points == std::vector<Vec>{v({2, -1})});
    CHECK(g.rays.empty());
    CHECK(g.lines.empty());
}

TEST_CASE("round trips preserve the set") {
    std::vector<HPoly> cases = {
        unit_square(),
        interval(-3, 7),
        hp(2, {row({1, 1}, 1)}),                                // half plane
        hp(2, {row({-1, 0}, 0)}, {row({0, 1}, 2)}),             // ray in a line
        hp(3, {row({1, 1, 1}, 1), row({-1, 0, 0}, 0), row({0, -1, 0}, 0), row({0, 0, -1}, 0)}),
        HPoly::whole_space(1),
        HPoly::empty(2),
    };
    for (const auto& p : cases) {
        CHECK(eq(dd_reverse(dd_convert(p)), p));
    }
}

TEST_CASE("random round trips") {
    Rng rng(20260815);
    for (int i = 0; i < 40; ++i) {
        int dim = 1 + static_cast<int>(rng.below(3));
        HPoly p = random_polyhedron(rng, dim);
        GenSet g = dd_convert(p);
        CHECK(eq(dd_reverse(g), p));
        // generator-form equality judged from the H side as well
        CHECK(eq(p, g));
    }
}

TEST_CASE("cone views of H-form cones") {
    HPoly quad = hp(2, {row({-1, 0}, 0), row({0, -1}, 0)});
    PolyCone c = cone_from_hpoly(quad);
    CHECK(eq(c, quad));
    CHECK(eq(cone_to_hpoly(c), quad));

    // a line through the origin
    HPoly ln = hp(2, {}, {row({1, 1}, 0)});
    PolyCone lc = cone_from_hpoly(ln);
    CHECK(eq(lc, ln));
}

TEST_CASE("cone_from_system enumerates dual generators") {
    // {y : y1 <= 0, y2 <= 0} has generators -e1, -e2
    ConeGens g = cone_from_system({v({1, 0}), v({0, 1})}, {}, 2);
    CHECK(g.lines.empty());
    PolyCone c{2, g.rays, g.lines};
    CHECK(eq(c, hp(2, {row({1, 0}, 0), row({0, 1}, 0)})));
}

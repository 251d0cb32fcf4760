#include <doctest.h>

#include "test_util.hpp"

using namespace testutil;

namespace {

// phi(x, y) = y over R x R
PolyFunc pick_y() { return affine_fn(v({0, 1}), 0); }

// F(x) = [|x|, inf)
PolyMap above_abs() { return epigraphical_map(abs_fn()); }

} // namespace

TEST_CASE("marginal function of an epigraphical constraint") {
    OvfInstance inst{pick_y(), above_abs()};
    PolyFunc mu = mu_function(inst);
    CHECK(evaluate(mu, v({-2})) == Rat(2));
    CHECK(evaluate(mu, v({0})) == Rat(0));
    CHECK(eq(mu.epi, abs_fn().epi));
}

TEST_CASE("marginal function through an identity constraint") {
    OvfInstance inst{pick_y(), identity_map(1)};
    PolyFunc mu = mu_function(inst);
    CHECK(evaluate(mu, v({3})) == Rat(3));
    CHECK(evaluate(mu, v({-5})) == Rat(-5));
}

TEST_CASE("zero objective gives the domain indicator") {
    PolyFunc zero = affine_fn(v({0, 0}), 0);
    PolyMap f{1, 1, hp(2, {row({-1, 0}, 0), row({1, 0}, 1), row({0, 1}, 2), row({0, -1}, 0)})};
    OvfInstance inst{zero, f};
    PolyFunc mu = mu_function(inst);
    CHECK(eq(mu.epi, indicator_fn(interval(0, 1)).epi));
}

TEST_CASE("a marginal sinking to minus infinity is rejected") {
    // phi(x, y) = y with unconstrained y
    OvfInstance inst{pick_y(), PolyMap{1, 1, HPoly::whole_space(2)}};
    CHECK(error_name_of([&] { mu_function(inst); }) == "ImproperValue");
}

TEST_CASE("solution sets") {
    CHECK(eq(solution_set(OvfInstance{pick_y(), above_abs()}, v({0})), gens(1, {v({0})})));

    PolyFunc zero = affine_fn(v({0, 0}), 0);
    PolyMap box{1, 1, hp(2, {row({0, -1}, 0), row({0, 1}, 1)})}; // F(x) = [0,1]
    CHECK(eq(solution_set(OvfInstance{zero, box}, v({7})), interval(0, 1)));

    // phi = y - x over F(x) = [x, x+1]
    PolyFunc drift = affine_fn(v({-1, 1}), 0);
    PolyMap band{1, 1, hp(2, {row({1, -1}, 0), row({-1, 1}, 1)})};
    CHECK(eq(solution_set(OvfInstance{drift, band}, v({2})), gens(1, {v({2})})));
}

TEST_CASE("solution set needs a domain point") {
    PolyMap gated = indicator_mapping(at_most(0), 1);
    OvfInstance inst{affine_fn(v({0, 0}), 0), gated};
    CHECK(error_name_of([&] { solution_set(inst, v({1})); }) == "NotInDomain");
}

TEST_CASE("optimal-value subdifferential through the coderivative") {
    OvfInstance inst{pick_y(), above_abs()};
    RuleReport rep = check_ovf_rule(inst, v({0}), v({0}));
    CHECK(rep.equal);
    CHECK(eq(rep.lhs, interval(-1, 1)));
}

TEST_CASE("linear data reduces to the adjoint") {
    // phi(x, y) = <c, y>, F(x) = {Ax}
    Mat a = mat_rows({{2}, {-1}});
    Vec c = v({3, 1});
    PolyFunc phi = affine_fn(v({0, 3, 1}), 0); // over (x, y1, y2)
    PolyMap f = affine_graph(a, v({0, 0}));
    OvfInstance inst{phi, f};
    Vec xbar = v({1});
    Vec ybar = mat_vec(a, xbar);
    RuleReport rep = check_ovf_rule(inst, xbar, ybar);
    CHECK(rep.equal);
    CHECK(eq(rep.lhs, gens(1, {Vec{dot(mat_t_vec(a, c), v({1}))}})));
    CHECK(eq(rep.lhs, gens(1, {v({5})})));
}

TEST_CASE("nonsmooth objective with domain constraints") {
    // phi(x, y) = y restricted to y >= 0, F(x) = [x, inf)
    PolyFunc phi = PolyFunc::max_affine(2, {row({0, 1}, 0)}, hp(2, {row({0, -1}, 0)}));
    PolyMap f{1, 1, hp(2, {row({1, -1}, 0)})};
    OvfInstance inst{phi, f};
    RuleReport rep = check_ovf_rule(inst, v({0}), v({0}));
    CHECK(rep.equal);
}

TEST_CASE("non-solutions are rejected") {
    OvfInstance inst{pick_y(), above_abs()};
    CHECK(error_name_of([&] { check_ovf_rule(inst, v({0}), v({1})); }) == "NotASolution");
}

TEST_CASE("the marginal lower-bounds the objective on the graph") {
    Rng rng(13251);
    for (int i = 0; i < 8; ++i) {
        PolyMap f = random_graph_mapping(rng, 1, 1);
        Vec base = pick_point(rng, f.graph);
        PolyFunc phi = random_function(rng, 2, false, &base, true);
        OvfInstance inst{phi, f};
        PolyFunc mu = mu_function(inst);
        for (int probe = 0; probe < 4; ++probe) {
            Vec xy = pick_point(rng, f.graph);
            Vec x(xy.begin(), xy.begin() + 1);
            auto mu_x = evaluate(mu, x);
            auto phi_xy = evaluate(phi, xy);
            if (phi_xy.has_value()) {
                REQUIRE(mu_x.has_value());
                CHECK(*mu_x <= *phi_xy);
            }
        }
    }
}

TEST_CASE("solution independence of the formula") {
    // every feasible point is optimal, so the formula must not depend on ybar
    PolyFunc zero = affine_fn(v({0, 0}), 0);
    PolyMap box{1, 1, hp(2, {row({0, -1}, 0), row({0, 1}, 1)})};
    OvfInstance inst{zero, box};
    GenSet first;
    bool have_first = false;
    for (const Vec& ybar : {v({0}), v({1}), vq({"1/2"})}) {
        RuleReport rep = check_ovf_rule(inst, v({0}), ybar);
        CHECK(rep.equal);
        if (!have_first) {
            first = rep.lhs;
            have_first = true;
        } else {
            CHECK(eq(first, rep.lhs));
        }
    }
}

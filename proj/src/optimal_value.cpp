#include "polycalc/optimal_value.hpp"

#include <stdexcept>

#include "polycalc/errors.hpp"

namespace polycalc {

void OvfInstance::validate() const {
    f.validate();
    require(phi.nx == f.nx + f.ny, "DimensionMismatch",
            "OvfInstance: objective must be a function of (x, y)");
}

PolyFunc mu_function(const OvfInstance& inst) {
    inst.validate();
    std::size_t nx = static_cast<std::size_t>(inst.f.nx);
    std::size_t ny = static_cast<std::size_t>(inst.f.ny);
    int total = static_cast<int>(nx + ny) + 1; // (x, y, t)

    HPoly joint = inst.phi.epi; // already over (x, y, t)
    joint = intersect(joint, embed(inst.f.graph, total, 0));
    HPoly epi = fm_eliminate(joint, [&] {
        std::vector<std::size_t> drop;
        for (std::size_t j = 0; j < ny; ++j) drop.push_back(nx + j);
        return drop;
    }());
    return PolyFunc::from_epigraph(static_cast<int>(nx), std::move(epi));
}

HPoly solution_set(const OvfInstance& inst, const Vec& x) {
    inst.validate();
    check_dim(x, static_cast<std::size_t>(inst.f.nx), "solution_set argument");
    PolyFunc mu = mu_function(inst);
    Rat mu_x = evaluate_finite(mu, x);

    HPoly feasible = substitute_block(inst.f.graph, 0, x);
    HPoly tight = substitute_block(inst.phi.epi, static_cast<std::size_t>(inst.phi.nx),
                                   Vec{mu_x});
    tight = substitute_block(tight, 0, x);
    HPoly s = intersect(feasible, tight);
    tidy(s);
    if (is_empty(s))
        throw std::logic_error("optimal value finite but not attained");
    return s;
}

RuleReport check_ovf_rule(const OvfInstance& inst, const Vec& x, const Vec& ybar) {
    inst.validate();
    HPoly sol = solution_set(inst, x);
    require(contains(sol, ybar), "NotASolution",
            "check_ovf_rule: ybar does not solve the inner problem at x");

    PolyFunc mu = mu_function(inst);
    HPoly lhs = subdifferential(mu, x);

    // (w, u, v) with (u, v) in dphi(x, ybar) and (w - u, -v) normal to
    // gph F at (x, ybar); project onto w.
    std::size_t nx = static_cast<std::size_t>(inst.f.nx);
    std::size_t ny = static_cast<std::size_t>(inst.f.ny);
    std::size_t total = 2 * nx + ny;

    Vec xy = x;
    xy.insert(xy.end(), ybar.begin(), ybar.end());
    HPoly dphi = subdifferential(inst.phi, xy);       // over (u, v)
    HPoly nf = normal_cone_hform(inst.f.graph, xy);   // over (p, q)

    HPoly joint = embed(dphi, static_cast<int>(total), nx);
    Mat t(nx + ny, total); // (w, u, v) -> (w - u, -v)
    for (std::size_t j = 0; j < nx; ++j) {
        t.at(j, j) = 1;
        t.at(j, nx + j) = -1;
    }
    for (std::size_t j = 0; j < ny; ++j) t.at(nx + j, 2 * nx + j) = -1;
    joint = intersect(joint, affine_preimage_system(nf, t, zero_vec(nx + ny)));

    std::vector<std::size_t> drop;
    for (std::size_t j = nx; j < total; ++j) drop.push_back(j);
    HPoly rhs = fm_eliminate(joint, drop);

    return make_report("ovf", rep_of(lhs), rep_of(rhs));
}

} // namespace polycalc

#include "polycalc/instance_gen.hpp"

#include <algorithm>

#include "polycalc/double_description.hpp"
#include "polycalc/json_io.hpp"
#include "polycalc/polyhedron_ops.hpp"

namespace polycalc {

std::uint64_t instance_seed(std::uint64_t seed, const std::string& stream, int index) {
    std::string key = stream;
    key += ':';
    key += std::to_string(index);
    key += ':';
    key += std::to_string(seed);
    return fnv1a(key);
}

GenSet random_genset(Rng& rng, int dim, const GenOptions& opt) {
    GenSet g;
    g.dim = dim;
    if (opt.anchor) {
        check_dim(*opt.anchor, static_cast<std::size_t>(dim), "random_genset");
        g.points.push_back(*opt.anchor);
    }
    if (dim == 0) {
        if (g.points.empty()) g.points.push_back(Vec{});
        return g;
    }
    auto n = static_cast<std::size_t>(dim);
    long npts = rng.range(g.points.empty() ? 1 : 0, 3);
    for (long i = 0; i < npts; ++i) g.points.push_back(rng.vec(n, opt.bound, opt.den_bound));
    if (opt.allow_rays) {
        long nrays = rng.range(0, 2);
        for (long i = 0; i < nrays; ++i) g.rays.push_back(rng.nonzero_vec(n, opt.bound, opt.den_bound));
    }
    if (opt.allow_lines && rng.chance(1, 4)) g.lines.push_back(rng.nonzero_vec(n, opt.bound, opt.den_bound));
    g.validate();
    return g;
}

HPoly random_polyhedron(Rng& rng, int dim, const GenOptions& opt, GenSet* gens_out) {
    GenSet g = random_genset(rng, dim, opt);
    if (gens_out) *gens_out = g;
    return dd_reverse(g);
}

Vec pick_point(Rng& rng, const HPoly& p) {
    GenSet g = dd_convert(p);
    require(!g.is_empty_set(), "EmptySet", "pick_point: empty polyhedron");
    switch (rng.below(4)) {
    case 1:
        if (g.points.size() >= 2) {
            std::size_t i = rng.below(g.points.size());
            std::size_t j = rng.below(g.points.size());
            if (i != j)
                return scale(Rat(1) / Rat(2), add(g.points[i], g.points[j]));
        }
        break;
    case 2:
        if (!g.rays.empty())
            return add(g.points[rng.below(g.points.size())], g.rays[rng.below(g.rays.size())]);
        break;
    case 3:
        return relative_interior_point(p);
    default:
        break;
    }
    return g.points[rng.below(g.points.size())];
}

PolyFunc random_function(Rng& rng, int nx, bool restrict_dom, const Vec* anchor,
                         bool bounded_below, long bound) {
    auto n = static_cast<std::size_t>(nx);
    std::vector<LinCon> pieces;
    long npieces = rng.range(1, 3);
    for (long i = 0; i < npieces; ++i)
        pieces.push_back({rng.vec(n, bound, 2), rng.rat(bound, 2)});
    if (bounded_below) pieces.push_back({zero_vec(n), rng.rat(bound, 2)});
    HPoly dom = HPoly::whole_space(nx);
    if (restrict_dom) {
        GenOptions opt;
        opt.bound = bound;
        opt.anchor = anchor;
        dom = random_polyhedron(rng, nx, opt);
    }
    return PolyFunc::max_affine(nx, pieces, dom);
}

PolyFunc random_univariate(Rng& rng, bool want_monotone, const Rat& dom_upper_at_least) {
    std::vector<LinCon> pieces;
    long npieces = rng.range(1, 2);
    for (long i = 0; i < npieces; ++i)
        pieces.push_back({Vec{make_rat(rng.range(0, 3), rng.range(1, 2))}, rng.rat(3, 2)});
    HPoly dom = HPoly::whole_space(1);
    bool cap_dom = rng.chance(1, 2);
    if (cap_dom) dom.ineqs.push_back({Vec{Rat(1)}, dom_upper_at_least + Rat(rng.range(0, 2))});
    if (!want_monotone) {
        if (cap_dom && rng.chance(1, 2)) {
            // A lower-bounded domain already breaks monotonicity: the
            // function jumps down from +infinity when the domain starts.
            dom.ineqs.push_back({Vec{Rat(-1)}, Rat(1) - dom_upper_at_least});
        } else {
            pieces.push_back({Vec{make_rat(-rng.range(1, 3), rng.range(1, 2))}, rng.rat(3, 2)});
        }
    }
    return PolyFunc::max_affine(1, pieces, dom);
}

PolyMap random_graph_mapping(Rng& rng, int nx, int ny, const GenOptions& opt) {
    PolyMap f;
    f.nx = nx;
    f.ny = ny;
    f.graph = random_polyhedron(rng, nx + ny, opt);
    return f;
}

} // namespace polycalc

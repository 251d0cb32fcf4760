#include "polycalc/mappings.hpp"

#include "polycalc/errors.hpp"

namespace polycalc {

void PolyMap::validate() const {
    require(nx >= 0 && ny >= 0, "DimensionMismatch", "PolyMap: negative dimension");
    require(graph.dim == nx + ny, "DimensionMismatch",
            "PolyMap: graph dimension must be nx + ny");
    graph.validate();
}

namespace {

Vec concat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

void require_on_graph(const PolyMap& f, const Vec& x, const Vec& y, const char* who) {
    check_dim(x, static_cast<std::size_t>(f.nx), "graph point x");
    check_dim(y, static_cast<std::size_t>(f.ny), "graph point y");
    require(contains(f.graph, concat(x, y)), "NotInGraph",
            std::string(who) + ": (x, y) is not on the graph");
}

std::vector<std::size_t> coord_range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> r;
    for (std::size_t j = from; j < to; ++j) r.push_back(j);
    return r;
}

} // namespace

HPoly evaluate(const PolyMap& f, const Vec& x) {
    f.validate();
    check_dim(x, static_cast<std::size_t>(f.nx), "evaluate argument");
    HPoly out = substitute_block(f.graph, 0, x);
    tidy(out);
    return out;
}

HPoly domain(const PolyMap& f) {
    f.validate();
    std::size_t nx = static_cast<std::size_t>(f.nx);
    return fm_eliminate(f.graph, coord_range(nx, nx + static_cast<std::size_t>(f.ny)));
}

PolyMap sum_mapping(const PolyMap& f1, const PolyMap& f2) {
    f1.validate();
    f2.validate();
    require(f1.nx == f2.nx && f1.ny == f2.ny, "DimensionMismatch",
            "sum_mapping: mapping shapes differ");
    std::size_t nx = static_cast<std::size_t>(f1.nx), ny = static_cast<std::size_t>(f1.ny);
    int total = static_cast<int>(nx + 3 * ny); // (x, y, y1, y2)

    HPoly joint = HPoly::whole_space(total);
    for (std::size_t j = 0; j < ny; ++j) {
        LinCon eq{zero_vec(static_cast<std::size_t>(total)), Rat(0)}; // y - y1 - y2 = 0
        eq.a[nx + j] = 1;
        eq.a[nx + ny + j] = -1;
        eq.a[nx + 2 * ny + j] = -1;
        joint.eqs.push_back(std::move(eq));
    }
    // graph of F1 on (x, y1), graph of F2 on (x, y2)
    Mat t1(nx + ny, nx + 3 * ny);
    Mat t2(nx + ny, nx + 3 * ny);
    for (std::size_t j = 0; j < nx; ++j) { t1.at(j, j) = 1; t2.at(j, j) = 1; }
    for (std::size_t j = 0; j < ny; ++j) {
        t1.at(nx + j, nx + ny + j) = 1;
        t2.at(nx + j, nx + 2 * ny + j) = 1;
    }
    Vec zero = zero_vec(nx + ny);
    joint = intersect(joint, affine_preimage_system(f1.graph, t1, zero));
    joint = intersect(joint, affine_preimage_system(f2.graph, t2, zero));

    PolyMap s;
    s.nx = f1.nx;
    s.ny = f1.ny;
    s.graph = fm_eliminate(joint, coord_range(nx + ny, nx + 3 * ny));
    return s;
}

PolyMap compose(const PolyMap& g, const PolyMap& f) {
    f.validate();
    g.validate();
    require(f.ny == g.nx, "DimensionMismatch",
            "compose: inner range dimension must match outer domain dimension");
    std::size_t nx = static_cast<std::size_t>(f.nx);
    std::size_t ny = static_cast<std::size_t>(f.ny);
    std::size_t nz = static_cast<std::size_t>(g.ny);
    int total = static_cast<int>(nx + ny + nz);

    HPoly joint = embed(f.graph, total, 0); // (x, y)
    joint = intersect(joint, embed(g.graph, total, nx)); // (y, z)

    PolyMap c;
    c.nx = f.nx;
    c.ny = g.ny;
    c.graph = fm_eliminate(joint, coord_range(nx, nx + ny));
    return c;
}

PolyMap indicator_mapping(const HPoly& theta, int ny) {
    theta.validate();
    require(ny >= 0, "DimensionMismatch", "indicator_mapping: negative range dimension");
    int total = theta.dim + ny;
    PolyMap d;
    d.nx = theta.dim;
    d.ny = ny;
    d.graph = embed(theta, total, 0);
    for (int j = 0; j < ny; ++j) {
        LinCon eq{zero_vec(static_cast<std::size_t>(total)), Rat(0)};
        eq.a[static_cast<std::size_t>(theta.dim + j)] = 1;
        d.graph.eqs.push_back(std::move(eq));
    }
    return d;
}

HPoly preimage(const PolyMap& f, const HPoly& theta) {
    f.validate();
    require(theta.dim == f.ny, "DimensionMismatch",
            "preimage: target set must live in the range space");
    std::size_t nx = static_cast<std::size_t>(f.nx);
    HPoly joint = intersect(f.graph, embed(theta, f.graph.dim, nx));
    return fm_eliminate(joint, coord_range(nx, nx + static_cast<std::size_t>(f.ny)));
}

HPoly coderivative(const PolyMap& f, const Vec& x, const Vec& y, const Vec& vstar) {
    f.validate();
    require_on_graph(f, x, y, "coderivative");
    check_dim(vstar, static_cast<std::size_t>(f.ny), "coderivative argument");
    HPoly nc = normal_cone_hform(f.graph, concat(x, y));
    HPoly out = substitute_block(nc, static_cast<std::size_t>(f.nx), neg(vstar));
    tidy(out);
    return out;
}

HPoly decomposition_set(const PolyMap& f1, const PolyMap& f2, const Vec& x, const Vec& y) {
    f1.validate();
    f2.validate();
    require(f1.nx == f2.nx && f1.ny == f2.ny, "DimensionMismatch",
            "decomposition_set: mapping shapes differ");
    check_dim(x, static_cast<std::size_t>(f1.nx), "decomposition_set x");
    check_dim(y, static_cast<std::size_t>(f1.ny), "decomposition_set y");
    std::size_t ny = static_cast<std::size_t>(f1.ny);
    int total = static_cast<int>(2 * ny);

    HPoly s = embed(evaluate(f1, x), total, 0);
    s = intersect(s, embed(evaluate(f2, x), total, ny));
    for (std::size_t j = 0; j < ny; ++j) {
        LinCon eq{zero_vec(2 * ny), y[j]}; // y1 + y2 = y
        eq.a[j] = 1;
        eq.a[ny + j] = 1;
        s.eqs.push_back(std::move(eq));
    }
    tidy(s);
    return s;
}

RuleReport check_sum_rule(const PolyMap& f1, const PolyMap& f2, const Vec& x,
                          const Vec& y, const Vec& y1, const Vec& y2, const Vec& vstar) {
    require(add(y1, y2) == y, "NotInGraph", "check_sum_rule: split does not add up to y");
    require_on_graph(f1, x, y1, "check_sum_rule (first summand)");
    require_on_graph(f2, x, y2, "check_sum_rule (second summand)");

    PolyMap s = sum_mapping(f1, f2);
    HPoly lhs = coderivative(s, x, y, vstar);
    HPoly rhs = minkowski_sum(coderivative(f1, x, y1, vstar),
                              coderivative(f2, x, y2, vstar));
    return make_report("sum", rep_of(lhs), rep_of(rhs));
}

RuleReport check_chain_rule(const PolyMap& g, const PolyMap& f, const Vec& x,
                            const Vec& z, const Vec& ybar, const Vec& wstar) {
    require(f.ny == g.nx, "DimensionMismatch",
            "check_chain_rule: inner range dimension must match outer domain dimension");
    require_on_graph(f, x, ybar, "check_chain_rule (inner mapping)");
    require_on_graph(g, ybar, z, "check_chain_rule (outer mapping)");

    PolyMap c = compose(g, f);
    HPoly lhs = coderivative(c, x, z, wstar);

    // {(u, v) : (u, -v) normal to gph F at (x, ybar), v in D*G(ybar, z)(w)},
    // projected onto u.
    std::size_t nx = static_cast<std::size_t>(f.nx);
    std::size_t ny = static_cast<std::size_t>(f.ny);
    HPoly nf = normal_cone_hform(f.graph, concat(x, ybar));
    Mat flip(nx + ny, nx + ny);
    for (std::size_t j = 0; j < nx; ++j) flip.at(j, j) = 1;
    for (std::size_t j = 0; j < ny; ++j) flip.at(nx + j, nx + j) = -1;
    HPoly joint = affine_preimage_system(nf, flip, zero_vec(nx + ny));
    joint = intersect(joint, embed(coderivative(g, ybar, z, wstar),
                                   static_cast<int>(nx + ny), nx));
    HPoly rhs = fm_eliminate(joint, coord_range(nx, nx + ny));

    return make_report("chain", rep_of(lhs), rep_of(rhs));
}

RuleReport check_preimage_rule(const PolyMap& f, const HPoly& theta, const Vec& x,
                               const Vec& ybar) {
    require(theta.dim == f.ny, "DimensionMismatch",
            "check_preimage_rule: target set must live in the range space");
    require_on_graph(f, x, ybar, "check_preimage_rule");
    require(contains(theta, ybar), "NotInSet",
            "check_preimage_rule: ybar outside the target set");

    HPoly pre = preimage(f, theta);
    PolyCone lhs = normal_cone(pre, x);

    std::size_t nx = static_cast<std::size_t>(f.nx);
    std::size_t ny = static_cast<std::size_t>(f.ny);
    HPoly nf = normal_cone_hform(f.graph, concat(x, ybar));
    Mat flip(nx + ny, nx + ny);
    for (std::size_t j = 0; j < nx; ++j) flip.at(j, j) = 1;
    for (std::size_t j = 0; j < ny; ++j) flip.at(nx + j, nx + j) = -1;
    HPoly joint = affine_preimage_system(nf, flip, zero_vec(nx + ny));
    joint = intersect(joint, embed(cone_to_hpoly(normal_cone(theta, ybar)),
                                   static_cast<int>(nx + ny), nx));
    HPoly rhs = fm_eliminate(joint, coord_range(nx, nx + ny));

    return make_report("preimage", rep_of(lhs), rep_of(rhs));
}

} // namespace polycalc

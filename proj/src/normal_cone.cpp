#include "polycalc/normal_cone.hpp"

#include "polycalc/errors.hpp"

namespace polycalc {

namespace {

void require_member(const HPoly& p, const Vec& x, const char* who) {
    if (contains(p, x)) return;
    if (is_empty(p)) fail("EmptySet", std::string(who) + ": polyhedron is empty");
    fail("NotInSet", std::string(who) + ": base point outside the polyhedron");
}

} // namespace

PolyCone normal_cone(const HPoly& p, const Vec& x) {
    require_member(p, x, "normal_cone");
    PolyCone c;
    c.dim = p.dim;
    for (std::size_t i : active_set(p, x))
        c.rays.push_back(p.ineqs[i].a);
    for (const auto& e : p.eqs)
        c.lines.push_back(e.a);
    dedup_dirs(c.rays, false);
    dedup_dirs(c.lines, true);
    return c;
}

PolyCone normal_cone_oracle(const HPoly& p, const Vec& x) {
    require_member(p, x, "normal_cone_oracle");
    GenSet g = dd_convert(p);
    std::vector<Vec> ineq_rows, eq_rows;
    for (const auto& pt : g.points) ineq_rows.push_back(sub(pt, x));
    for (const auto& r : g.rays) ineq_rows.push_back(r);
    for (const auto& l : g.lines) eq_rows.push_back(l);
    ConeGens cone = cone_from_system(ineq_rows, eq_rows, static_cast<std::size_t>(p.dim));
    return PolyCone{p.dim, std::move(cone.rays), std::move(cone.lines)};
}

HPoly normal_cone_hform(const HPoly& p, const Vec& x) {
    return cone_to_hpoly(normal_cone(p, x));
}

RuleReport check_intersection_rule(const HPoly& p, const HPoly& q, const Vec& x) {
    require(p.dim == q.dim, "DimensionMismatch", "check_intersection_rule: dimensions differ");
    HPoly both = intersect(p, q);
    require_member(both, x, "check_intersection_rule");

    // Left side from the definition of the normal cone to the intersection,
    // right side from the active-set formula on each operand; the two
    // pipelines share only the DD kernel.
    PolyCone lhs = normal_cone_oracle(both, x);

    PolyCone np = normal_cone(p, x);
    PolyCone nq = normal_cone(q, x);
    PolyCone rhs;
    rhs.dim = p.dim;
    rhs.rays = np.rays;
    rhs.rays.insert(rhs.rays.end(), nq.rays.begin(), nq.rays.end());
    rhs.lines = np.lines;
    rhs.lines.insert(rhs.lines.end(), nq.lines.begin(), nq.lines.end());
    dedup_dirs(rhs.rays, false);
    dedup_dirs(rhs.lines, true);

    return make_report("intersection", rep_of(lhs), rep_of(rhs));
}

} // namespace polycalc

#pragma once

#include "polycalc/normal_cone.hpp"

namespace polycalc {

// Polyhedral set-valued mapping R^nx => R^ny, stored as its graph
// {(x, y) : y in F(x)} with x first.
struct PolyMap {
    int nx = 0;
    int ny = 0;
    HPoly graph;

    void validate() const;
};

// F(x) as a polyhedron in R^ny (possibly empty).
HPoly evaluate(const PolyMap& f, const Vec& x);

HPoly domain(const PolyMap& f);

// x => F1(x) + F2(x)
PolyMap sum_mapping(const PolyMap& f1, const PolyMap& f2);

// x => G(F(x)) = union of G(y) over y in F(x)
PolyMap compose(const PolyMap& g, const PolyMap& f);

// x => {0} when x in theta, empty otherwise.
PolyMap indicator_mapping(const HPoly& theta, int ny);

// F^{-1}(theta) = {x : F(x) meets theta}
HPoly preimage(const PolyMap& f, const HPoly& theta);

// D*F(x,y)(v) = {u : (u, -v) normal to the graph at (x, y)}, as an H-form
// polyhedron in R^nx.  Throws NotInGraph when (x, y) is not on the graph.
HPoly coderivative(const PolyMap& f, const Vec& x, const Vec& y, const Vec& vstar);

// {(y1, y2) : y1 in F1(x), y2 in F2(x), y1 + y2 = y} in R^{2 ny}.
HPoly decomposition_set(const PolyMap& f1, const PolyMap& f2, const Vec& x, const Vec& y);

// D*(F1 + F2) at (x, y) against D*F1 + D*F2 at the split (y1, y2).
RuleReport check_sum_rule(const PolyMap& f1, const PolyMap& f2, const Vec& x,
                          const Vec& y, const Vec& y1, const Vec& y2, const Vec& vstar);

// D*(G o F) at (x, z) against the composite formula through the
// intermediate point ybar in F(x) intersected with G^{-1}(z); the union
// over intermediate multipliers is realized as one projection.
RuleReport check_chain_rule(const PolyMap& g, const PolyMap& f, const Vec& x,
                            const Vec& z, const Vec& ybar, const Vec& wstar);

// N(x; F^{-1}(theta)) against the coderivative formula through ybar.
RuleReport check_preimage_rule(const PolyMap& f, const HPoly& theta, const Vec& x,
                               const Vec& ybar);

} // namespace polycalc

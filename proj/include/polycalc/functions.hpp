#pragma once

#include "polycalc/mappings.hpp"

namespace polycalc {

// Proper polyhedral convex function, stored through its epigraph
// {(x, t) : t >= f(x)} with t as the trailing coordinate.  Construction
// validates properness: the epigraph is nonempty, recedes upward in t and
// never downward (ImproperValue otherwise).
struct PolyFunc {
    int nx = 0;
    HPoly epi;

    static PolyFunc from_epigraph(int nx, HPoly epi);

    // max over pieces of <a_j, x> + b_j, restricted to dom (indicator
    // behaviour comes from a single zero piece).
    static PolyFunc max_affine(int nx, const std::vector<LinCon>& pieces, const HPoly& dom);
};

// f(x), or nullopt when f(x) = +infinity.
std::optional<Rat> evaluate(const PolyFunc& f, const Vec& x);

// f(x) or a NotInDomain error.
Rat evaluate_finite(const PolyFunc& f, const Vec& x);

HPoly domain(const PolyFunc& f);

// x => [f(x), +infinity)
PolyMap epigraphical_map(const PolyFunc& f);

// The subdifferential at x in H-form: the slice of N((x, f(x)); epi f) at
// height -1.  Throws NotInDomain outside dom f.
HPoly subdifferential(const PolyFunc& f, const Vec& x);

// The horizon slice at height 0; equals N(x; dom f).
PolyCone singular_subdifferential(const PolyFunc& f, const Vec& x);

// lambda * subdifferential for lambda > 0, the singular subdifferential for
// lambda = 0; NegativeLambda otherwise.
HPoly lambda_odot(const Rat& lambda, const PolyFunc& f, const Vec& x);

// {x* : (x*, -lambda) normal to epi f at (x, f(x)) for some lambda >= 0},
// as one projection.  Equals the union of lambda_odot over lambda >= 0.
HPoly lambda_union_cone(const PolyFunc& f, const Vec& x);

// d(f1 + f2)(x) against df1(x) + df2(x).
RuleReport check_subdiff_sum_rule(const PolyFunc& f1, const PolyFunc& f2, const Vec& x);

// x => f(A x + b); throws ImproperValue when nothing maps into dom f.
PolyFunc compose_affine(const PolyFunc& f, const Mat& a, const Vec& b);

// d(f o (A . + b))(x) against A^T df(A x + b).
RuleReport check_affine_chain(const PolyFunc& f, const Mat& a, const Vec& b, const Vec& x);

// N(x; {f <= gamma}) for a boundary point (f(x) = gamma exactly, else
// NotOnLevelSet), computed through the epigraph projection.
PolyCone sublevel_normal_cone(const PolyFunc& f, const Rat& gamma, const Vec& x);

// The cone above against the normal cone of the explicit sublevel slice.
RuleReport check_sublevel(const PolyFunc& f, const Rat& gamma, const Vec& x);

// N(x; {f_i <= gamma_i for all i}), active terms through epigraph
// projections, inactive terms through domain normal cones, folded with
// exact Minkowski sums; verified against the explicit intersection.
RuleReport check_multi_sublevel(const std::vector<PolyFunc>& fs, const std::vector<Rat>& gammas,
                                const Vec& x);

// Nondecreasing test for a univariate polyhedral function: exact, via the
// horizontal recession direction of the epigraph.
bool is_monotone_nondecreasing(const PolyFunc& phi);

// phi o f for univariate nondecreasing phi (NotMonotone otherwise).
PolyFunc monotone_compose(const PolyFunc& phi, const PolyFunc& f);

// d(phi o f)(x) against the union of lambda (.) df(x) over lambda in
// dphi(f(x)), realized as one projection.
RuleReport check_monotone_compose(const PolyFunc& phi, const PolyFunc& f, const Vec& x);

} // namespace polycalc

#include "polycalc/functions.hpp"

#include <stdexcept>

#include "polycalc/errors.hpp"

namespace polycalc {

namespace {

Vec with_tail(const Vec& x, const Rat& t) {
    Vec r = x;
    r.push_back(t);
    return r;
}

} // namespace

PolyFunc PolyFunc::from_epigraph(int nx, HPoly epi) {
    require(nx >= 0, "DimensionMismatch", "PolyFunc: negative dimension");
    require(epi.dim == nx + 1, "DimensionMismatch",
            "PolyFunc: epigraph must have one extra coordinate");
    epi.validate();
    Vec up = unit_vec(static_cast<std::size_t>(nx) + 1, static_cast<std::size_t>(nx));
    require(in_recession_cone(epi, up), "ImproperValue",
            "PolyFunc: epigraph is not closed upward");
    require(!in_recession_cone(epi, neg(up)), "ImproperValue",
            "PolyFunc: function takes the value -infinity");
    require(!is_empty(epi), "ImproperValue", "PolyFunc: function is identically +infinity");
    PolyFunc f;
    f.nx = nx;
    f.epi = std::move(epi);
    return f;
}

PolyFunc PolyFunc::max_affine(int nx, const std::vector<LinCon>& pieces, const HPoly& dom) {
    require(dom.dim == nx, "DimensionMismatch", "max_affine: domain dimension mismatch");
    std::size_t n = static_cast<std::size_t>(nx);
    HPoly epi = embed(dom, nx + 1, 0);
    for (const auto& p : pieces) {
        check_dim(p.a, n, "max_affine piece");
        LinCon row{with_tail(p.a, Rat(-1)), -p.b}; // <a,x> + b <= t
        epi.ineqs.push_back(std::move(row));
    }
    return from_epigraph(nx, std::move(epi));
}

std::optional<Rat> evaluate(const PolyFunc& f, const Vec& x) {
    check_dim(x, static_cast<std::size_t>(f.nx), "function argument");
    HPoly slice = substitute_block(f.epi, 0, x);
    LPResult r = lp_solve(Vec{Rat(1)}, Sense::Min, slice);
    if (r.status == LPStatus::Infeasible) return std::nullopt;
    if (r.status != LPStatus::Optimal)
        throw std::logic_error("epigraph slice unbounded below despite properness");
    return r.value;
}

Rat evaluate_finite(const PolyFunc& f, const Vec& x) {
    auto v = evaluate(f, x);
    require(v.has_value(), "NotInDomain", "point outside dom f");
    return *v;
}

HPoly domain(const PolyFunc& f) {
    return fm_eliminate(f.epi, {static_cast<std::size_t>(f.nx)});
}

PolyMap epigraphical_map(const PolyFunc& f) {
    PolyMap e;
    e.nx = f.nx;
    e.ny = 1;
    e.graph = f.epi;
    return e;
}

HPoly subdifferential(const PolyFunc& f, const Vec& x) {
    Rat fx = evaluate_finite(f, x);
    HPoly nc = normal_cone_hform(f.epi, with_tail(x, fx));
    HPoly out = substitute_block(nc, static_cast<std::size_t>(f.nx), Vec{Rat(-1)});
    tidy(out);
    return out;
}

PolyCone singular_subdifferential(const PolyFunc& f, const Vec& x) {
    Rat fx = evaluate_finite(f, x);
    HPoly nc = normal_cone_hform(f.epi, with_tail(x, fx));
    HPoly out = substitute_block(nc, static_cast<std::size_t>(f.nx), Vec{Rat(0)});
    tidy(out);
    return cone_from_hpoly(out);
}

HPoly lambda_odot(const Rat& lambda, const PolyFunc& f, const Vec& x) {
    require(lambda >= 0, "NegativeLambda", "lambda_odot: negative multiplier");
    if (lambda == 0) return cone_to_hpoly(singular_subdifferential(f, x));
    HPoly sub = subdifferential(f, x);
    std::size_t n = static_cast<std::size_t>(f.nx);
    Mat shrink(n, n);
    for (std::size_t j = 0; j < n; ++j) shrink.at(j, j) = Rat(1) / lambda;
    return affine_preimage(sub, shrink, zero_vec(n)); // y in lambda*S iff y/lambda in S
}

HPoly lambda_union_cone(const PolyFunc& f, const Vec& x) {
    Rat fx = evaluate_finite(f, x);
    std::size_t n = static_cast<std::size_t>(f.nx);
    HPoly nc = normal_cone_hform(f.epi, with_tail(x, fx));
    // (x*, lambda) with (x*, -lambda) in the epigraph normal cone and
    // lambda >= 0, projected onto x*.
    Mat flip = Mat::identity(n + 1);
    flip.at(n, n) = -1;
    HPoly joint = affine_preimage_system(nc, flip, zero_vec(n + 1));
    joint.ineqs.push_back(LinCon{scale(Rat(-1), unit_vec(n + 1, n)), Rat(0)});
    return fm_eliminate(joint, {n});
}

RuleReport check_subdiff_sum_rule(const PolyFunc& f1, const PolyFunc& f2, const Vec& x) {
    require(f1.nx == f2.nx, "DimensionMismatch", "check_subdiff_sum_rule: dimensions differ");
    evaluate_finite(f1, x);
    evaluate_finite(f2, x);

    PolyMap esum = sum_mapping(epigraphical_map(f1), epigraphical_map(f2));
    PolyFunc sum = PolyFunc::from_epigraph(f1.nx, esum.graph);
    HPoly lhs = subdifferential(sum, x);
    HPoly rhs = minkowski_sum(subdifferential(f1, x), subdifferential(f2, x));
    return make_report("subdifferential-sum", rep_of(lhs), rep_of(rhs));
}

PolyFunc compose_affine(const PolyFunc& f, const Mat& a, const Vec& b) {
    require(a.rows == static_cast<std::size_t>(f.nx), "DimensionMismatch",
            "compose_affine: matrix rows must match the function dimension");
    check_dim(b, a.rows, "compose_affine offset");
    std::size_t n = a.cols;
    Mat lift(a.rows + 1, n + 1); // (x, t) -> (A x + b, t)
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) lift.at(i, j) = a.at(i, j);
    lift.at(a.rows, n) = 1;
    HPoly epi = affine_preimage(f.epi, lift, with_tail(b, Rat(0)));
    return PolyFunc::from_epigraph(static_cast<int>(n), std::move(epi));
}

RuleReport check_affine_chain(const PolyFunc& f, const Mat& a, const Vec& b, const Vec& x) {
    check_dim(x, a.cols, "check_affine_chain base point");
    Vec y = add(mat_vec(a, x), b);
    evaluate_finite(f, y);

    PolyFunc comp = compose_affine(f, a, b);
    HPoly lhs = subdifferential(comp, x);
    HPoly rhs = affine_image(subdifferential(f, y), transpose(a), zero_vec(a.cols));
    return make_report("affine-chain", rep_of(lhs), rep_of(rhs));
}

PolyCone sublevel_normal_cone(const PolyFunc& f, const Rat& gamma, const Vec& x) {
    Rat fx = evaluate_finite(f, x);
    require(fx == gamma, "NotOnLevelSet",
            "sublevel_normal_cone: f(x) must equal gamma exactly");
    return cone_from_hpoly(lambda_union_cone(f, x));
}

namespace {

HPoly sublevel_slice(const PolyFunc& f, const Rat& gamma) {
    HPoly s = substitute_block(f.epi, static_cast<std::size_t>(f.nx), Vec{gamma});
    tidy(s);
    return s;
}

HPoly point_polyhedron(const Vec& x) {
    HPoly p = HPoly::whole_space(static_cast<int>(x.size()));
    for (std::size_t j = 0; j < x.size(); ++j)
        p.eqs.push_back(LinCon{unit_vec(x.size(), j), x[j]});
    return p;
}

} // namespace

RuleReport check_sublevel(const PolyFunc& f, const Rat& gamma, const Vec& x) {
    PolyCone rhs = sublevel_normal_cone(f, gamma, x);
    PolyCone lhs = normal_cone(sublevel_slice(f, gamma), x);
    return make_report("sublevel", rep_of(lhs), rep_of(rhs));
}

RuleReport check_multi_sublevel(const std::vector<PolyFunc>& fs, const std::vector<Rat>& gammas,
                                const Vec& x) {
    require(fs.size() >= 2, "DimensionMismatch",
            "check_multi_sublevel: need at least two functions");
    require(fs.size() == gammas.size(), "DimensionMismatch",
            "check_multi_sublevel: one level per function");
    int n = fs[0].nx;
    for (const auto& f : fs)
        require(f.nx == n, "DimensionMismatch", "check_multi_sublevel: dimensions differ");

    std::vector<Rat> values;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto v = evaluate(fs[i], x);
        require(v.has_value() && *v <= gammas[i], "NotInSublevelSet",
                "check_multi_sublevel: constraint " + std::to_string(i) +
                " is violated at the base point");
        values.push_back(*v);
    }

    HPoly level = HPoly::whole_space(n);
    for (std::size_t i = 0; i < fs.size(); ++i)
        level = intersect(level, sublevel_slice(fs[i], gammas[i]));
    PolyCone lhs = normal_cone(level, x);

    // Active constraints contribute their lambda-union cones, inactive ones
    // the normal cone of their domain; the sum is folded exactly.
    bool all_inactive_trivial = true;
    HPoly rhs = point_polyhedron(zero_vec(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < fs.size(); ++i) {
        HPoly piece;
        if (values[i] == gammas[i]) {
            piece = lambda_union_cone(fs[i], x);
        } else {
            PolyCone dn = normal_cone(domain(fs[i]), x);
            if (!dn.rays.empty() || !dn.lines.empty()) all_inactive_trivial = false;
            piece = cone_to_hpoly(dn);
        }
        rhs = minkowski_sum(rhs, piece);
    }

    std::string note = all_inactive_trivial ? "inactive domain terms trivial" : "";
    return make_report("multi-sublevel", rep_of(lhs), rep_of(rhs), note);
}

bool is_monotone_nondecreasing(const PolyFunc& phi) {
    require(phi.nx == 1, "DimensionMismatch", "monotonicity is defined for univariate functions");
    return in_recession_cone(phi.epi, Vec{Rat(-1), Rat(0)});
}

PolyFunc monotone_compose(const PolyFunc& phi, const PolyFunc& f) {
    require(is_monotone_nondecreasing(phi), "NotMonotone",
            "monotone_compose: outer function must be nondecreasing");
    PolyMap comp = compose(epigraphical_map(phi), epigraphical_map(f));
    return PolyFunc::from_epigraph(f.nx, comp.graph);
}

RuleReport check_monotone_compose(const PolyFunc& phi, const PolyFunc& f, const Vec& x) {
    PolyFunc comp = monotone_compose(phi, f); // NotMonotone before any evaluation
    Rat fx = evaluate_finite(f, x);
    require(evaluate(phi, Vec{fx}).has_value(), "NotInDomain",
            "check_monotone_compose: f(x) outside dom phi");

    HPoly lhs = subdifferential(comp, x);

    // {(x*, lambda) : (x*, -lambda) normal to epi f at (x, f(x)),
    //  lambda in dphi(f(x))}, projected onto x*.
    std::size_t n = static_cast<std::size_t>(f.nx);
    HPoly nc = normal_cone_hform(f.epi, with_tail(x, fx));
    Mat flip = Mat::identity(n + 1);
    flip.at(n, n) = -1;
    HPoly joint = affine_preimage_system(nc, flip, zero_vec(n + 1));
    joint = intersect(joint, embed(subdifferential(phi, Vec{fx}), static_cast<int>(n + 1), n));
    HPoly rhs = fm_eliminate(joint, {n});

    return make_report("monotone-compose", rep_of(lhs), rep_of(rhs));
}

} // namespace polycalc

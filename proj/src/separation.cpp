#include "polycalc/separation.hpp"

#include <stdexcept>

#include "polycalc/double_description.hpp"
#include "polycalc/errors.hpp"

namespace polycalc {

namespace {

// Max sigma with x in p, x in omega with slack >= sigma in every
// non-implicit inequality, sigma <= 1.  A positive optimum exhibits a point
// of p in the relative interior of omega.
std::optional<Vec> common_ri_point(const HPoly& p, const HPoly& omega) {
    AffineHull hull = affine_hull(omega);
    std::vector<bool> implicit(omega.ineqs.size(), false);
    for (auto i : hull.implicit) implicit[i] = true;

    std::size_t n = static_cast<std::size_t>(p.dim);
    HPoly lifted = HPoly::whole_space(static_cast<int>(n) + 1);
    auto lift = [&](const LinCon& c, const Rat& slack) {
        LinCon row{c.a, c.b};
        row.a.push_back(slack);
        return row;
    };
    for (const auto& c : p.ineqs) lifted.ineqs.push_back(lift(c, Rat(0)));
    for (const auto& c : p.eqs) lifted.eqs.push_back(lift(c, Rat(0)));
    for (std::size_t i = 0; i < omega.ineqs.size(); ++i)
        lifted.ineqs.push_back(lift(omega.ineqs[i], implicit[i] ? Rat(0) : Rat(1)));
    for (const auto& c : omega.eqs) lifted.eqs.push_back(lift(c, Rat(0)));
    lifted.ineqs.push_back(LinCon{unit_vec(n + 1, n), Rat(1)});

    LPResult r = lp_solve(unit_vec(n + 1, n), Sense::Max, lifted);
    if (r.status == LPStatus::Infeasible || r.value <= 0) return std::nullopt;
    if (r.status != LPStatus::Optimal)
        throw std::logic_error("bounded slack objective cannot be unbounded");
    return Vec(r.point.begin(), r.point.end() - 1);
}

} // namespace

SepResult separate(const HPoly& p, const HPoly& omega) {
    require(p.dim == omega.dim, "DimensionMismatch", "separate: dimensions differ");
    require(!is_empty(p), "EmptyInput", "separate: first set is empty");
    require(!is_empty(omega), "EmptyInput", "separate: second set is empty");

    SepResult res;
    if (auto common = common_ri_point(p, omega)) {
        res.verdict = SepVerdict::NotSeparable;
        res.common_point = *common;
        return res;
    }

    // Admissible pairs (a, alpha): <a,.> <= alpha on p and >= alpha on
    // omega, described through the generators of both sets.  Maximizing the
    // total strict slack on the omega side (capped at 1) yields a separator
    // with a strict witness in one LP.
    GenSet gp = dd_convert(p);
    GenSet go = dd_convert(omega);
    std::size_t n = static_cast<std::size_t>(p.dim);

    HPoly adm = HPoly::whole_space(static_cast<int>(n) + 1);
    auto row_of = [&](const Vec& v, const Rat& acoef) {
        LinCon c{v, Rat(0)};
        c.a.push_back(acoef);
        return c;
    };
    for (const auto& q : gp.points) adm.ineqs.push_back(row_of(q, Rat(-1)));
    for (const auto& r : gp.rays) adm.ineqs.push_back(row_of(r, Rat(0)));
    for (const auto& l : gp.lines) adm.eqs.push_back(row_of(l, Rat(0)));
    for (const auto& q : go.points) adm.ineqs.push_back(row_of(neg(q), Rat(1)));
    for (const auto& r : go.rays) adm.ineqs.push_back(row_of(neg(r), Rat(0)));
    for (const auto& l : go.lines) adm.eqs.push_back(row_of(l, Rat(0)));

    Vec objective = zero_vec(n + 1);
    for (const auto& q : go.points) {
        for (std::size_t j = 0; j < n; ++j) objective[j] += q[j];
        objective[n] -= 1;
    }
    for (const auto& r : go.rays)
        for (std::size_t j = 0; j < n; ++j) objective[j] += r[j];
    HPoly capped = adm;
    capped.ineqs.push_back(LinCon{objective, Rat(1)});

    LPResult r = lp_solve(objective, Sense::Max, capped);
    if (r.status != LPStatus::Optimal || r.value <= 0)
        throw std::logic_error("empty relative-interior meeting must admit a separator");

    res.verdict = SepVerdict::Separable;
    res.x_star = Vec(r.point.begin(), r.point.end() - 1);
    res.alpha = r.point.back();
    for (const auto& q : go.points) {
        if (dot(res.x_star, q) > res.alpha) { res.witness = q; break; }
    }
    if (!res.witness) {
        for (const auto& ray : go.rays) {
            if (dot(res.x_star, ray) > 0) {
                res.witness = add(go.points.front(), ray);
                break;
            }
        }
    }
    if (!res.witness)
        throw std::logic_error("positive slack without a strict generator");
    return res;
}

HPoly gpcs_to_pcs(const HPoly& q) {
    q.validate();
    HPoly out;
    out.dim = q.dim;
    out.ineqs = q.ineqs;
    for (const auto& e : q.eqs) {
        out.ineqs.push_back(e);
        out.ineqs.push_back(LinCon{neg(e.a), -e.b});
    }
    return out;
}

std::size_t codim(const HPoly& m) {
    m.validate();
    std::vector<Vec> normals;
    for (const auto& e : m.eqs) normals.push_back(e.a);
    return rank_of_rows(normals, static_cast<std::size_t>(m.dim));
}

bool separation_certificate_ok(const HPoly& p, const HPoly& omega, const SepResult& res) {
    if (res.verdict == SepVerdict::NotSeparable) {
        if (!res.common_point) return false;
        const Vec& c = *res.common_point;
        if (!contains(p, c) || !contains(omega, c)) return false;
        // Relative interior: strict slack in every inequality of omega that
        // is not tight on all of omega.
        AffineHull hull = affine_hull(omega);
        std::vector<bool> implicit(omega.ineqs.size(), false);
        for (auto i : hull.implicit) implicit[i] = true;
        for (std::size_t i = 0; i < omega.ineqs.size(); ++i) {
            if (implicit[i]) continue;
            if (dot(omega.ineqs[i].a, c) >= omega.ineqs[i].b) return false;
        }
        return true;
    }
    if (res.x_star.size() != static_cast<std::size_t>(p.dim)) return false;
    if (is_zero(res.x_star)) return false;
    // <x*, p> <= alpha and <x*, omega> >= alpha, checked on generators.
    GenSet gp = dd_convert(p);
    GenSet go = dd_convert(omega);
    for (const auto& q : gp.points)
        if (dot(res.x_star, q) > res.alpha) return false;
    for (const auto& r : gp.rays)
        if (dot(res.x_star, r) > 0) return false;
    for (const auto& l : gp.lines)
        if (dot(res.x_star, l) != 0) return false;
    for (const auto& q : go.points)
        if (dot(res.x_star, q) < res.alpha) return false;
    for (const auto& r : go.rays)
        if (dot(res.x_star, r) < 0) return false;
    for (const auto& l : go.lines)
        if (dot(res.x_star, l) != 0) return false;
    if (!res.witness) return false;
    return contains(omega, *res.witness) && dot(res.x_star, *res.witness) > res.alpha;
}

} // namespace polycalc

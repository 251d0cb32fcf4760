#include "polycalc/polyhedron_ops.hpp"

#include <algorithm>
#include <stdexcept>

#include "polycalc/errors.hpp"

namespace polycalc {

bool is_empty(const HPoly& p) {
    return lp_solve(zero_vec(p.dim), Sense::Min, p).status == LPStatus::Infeasible;
}

std::optional<Vec> find_point(const HPoly& p) {
    LPResult r = lp_solve(zero_vec(p.dim), Sense::Min, p);
    if (r.status == LPStatus::Infeasible) return std::nullopt;
    return r.point;
}

namespace {

// Removes redundant inequalities in place; false means the system turned
// out infeasible.  Sequential filtering is sound: a row implied by the
// surviving set stays implied as that set only loses rows that were
// themselves implied.
bool drop_redundant_rows(HPoly& p) {
    if (!tidy(p)) return false;
    for (std::size_t i = 0; i < p.ineqs.size();) {
        LinCon row = p.ineqs[i];
        HPoly rest = p;
        rest.ineqs.erase(rest.ineqs.begin() + static_cast<std::ptrdiff_t>(i));
        LPResult r = lp_solve(row.a, Sense::Max, rest);
        if (r.status == LPStatus::Infeasible) return false;
        if (r.status == LPStatus::Optimal && r.value <= row.b)
            p.ineqs.erase(p.ineqs.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return true;
}

// One Fourier-Motzkin step: eliminate coordinate v from a system whose
// equalities no longer mention it.
void fm_step(HPoly& p, std::size_t v) {
    std::vector<LinCon> zero, pos, neg;
    for (auto& c : p.ineqs) {
        if (c.a[v] == 0)
            zero.push_back(std::move(c));
        else if (c.a[v] > 0)
            pos.push_back(std::move(c));
        else
            neg.push_back(std::move(c));
    }
    std::vector<LinCon> out = std::move(zero);
    for (const auto& cp : pos) {
        for (const auto& cn : neg) {
            LinCon comb;
            comb.a = add(scale(-cn.a[v], cp.a), scale(cp.a[v], cn.a));
            comb.b = -cn.a[v] * cp.b + cp.a[v] * cn.b;
            out.push_back(std::move(comb));
        }
    }
    p.ineqs = std::move(out);
}

HPoly drop_coordinates(const HPoly& p, const std::vector<bool>& dead) {
    HPoly out;
    out.dim = 0;
    for (std::size_t j = 0; j < dead.size(); ++j)
        if (!dead[j]) ++out.dim;
    auto conv = [&](const LinCon& c) {
        LinCon n;
        n.b = c.b;
        n.a.reserve(out.dim);
        for (std::size_t j = 0; j < dead.size(); ++j)
            if (!dead[j]) n.a.push_back(c.a[j]);
        return n;
    };
    for (const auto& c : p.ineqs) out.ineqs.push_back(conv(c));
    for (const auto& c : p.eqs) out.eqs.push_back(conv(c));
    return out;
}

} // namespace

HPoly fm_eliminate(const HPoly& p, std::vector<std::size_t> drop) {
    p.validate();
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    require(drop.empty() || drop.back() < static_cast<std::size_t>(p.dim),
            "DimensionMismatch", "fm_eliminate: coordinate out of range");

    std::vector<bool> dead(static_cast<std::size_t>(p.dim), false);
    HPoly work = p;

    // Equalities mentioning a dropped coordinate absorb it exactly.
    for (std::size_t v : drop) {
        std::size_t piv = work.eqs.size();
        for (std::size_t j = 0; j < work.eqs.size(); ++j) {
            if (work.eqs[j].a[v] != 0) { piv = j; break; }
        }
        if (piv == work.eqs.size()) continue;
        LinCon pe = work.eqs[piv];
        work.eqs.erase(work.eqs.begin() + static_cast<std::ptrdiff_t>(piv));
        auto reduce = [&](LinCon& c) {
            if (c.a[v] == 0) return;
            Rat f = c.a[v] / pe.a[v];
            c.a = sub(c.a, scale(f, pe.a));
            c.b -= f * pe.b;
        };
        for (auto& c : work.ineqs) reduce(c);
        for (auto& c : work.eqs) reduce(c);
        dead[v] = true;
    }

    // The rest go through Fourier-Motzkin, cheapest fan-out first, pruning
    // redundant rows after every elimination.
    std::vector<std::size_t> pending;
    for (std::size_t v : drop)
        if (!dead[v]) pending.push_back(v);
    while (!pending.empty()) {
        std::size_t best = 0;
        std::size_t best_cost = 0;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            std::size_t np = 0, nn = 0;
            for (const auto& c : work.ineqs) {
                if (c.a[pending[k]] > 0) ++np;
                else if (c.a[pending[k]] < 0) ++nn;
            }
            std::size_t cost = np * nn;
            if (k == 0 || cost < best_cost) { best = k; best_cost = cost; }
        }
        std::size_t v = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        fm_step(work, v);
        dead[v] = true;
        if (!drop_redundant_rows(work)) {
            HPoly out = HPoly::empty(p.dim - static_cast<int>(drop.size()));
            return out;
        }
    }

    HPoly out = drop_coordinates(work, dead);
    if (!drop_redundant_rows(out)) return HPoly::empty(out.dim);
    if (!out.ineqs.empty() || !out.eqs.empty()) {
        if (is_empty(out)) return HPoly::empty(out.dim);
    }
    return out;
}

HPoly remove_redundancy(HPoly p) {
    p.validate();
    if (!drop_redundant_rows(p)) return HPoly::empty(p.dim);
    if ((!p.ineqs.empty() || !p.eqs.empty()) && is_empty(p))
        return HPoly::empty(p.dim);
    return p;
}

HPoly minkowski_sum(const HPoly& p, const HPoly& q) {
    require(p.dim == q.dim, "DimensionMismatch", "minkowski_sum: dimensions differ");
    int n = p.dim;
    HPoly joint = HPoly::whole_space(3 * n);
    for (int j = 0; j < n; ++j) {
        LinCon eq{zero_vec(3 * n), Rat(0)}; // x - u - v = 0
        eq.a[static_cast<std::size_t>(j)] = 1;
        eq.a[static_cast<std::size_t>(n + j)] = -1;
        eq.a[static_cast<std::size_t>(2 * n + j)] = -1;
        joint.eqs.push_back(std::move(eq));
    }
    joint = intersect(joint, embed(p, 3 * n, static_cast<std::size_t>(n)));
    joint = intersect(joint, embed(q, 3 * n, static_cast<std::size_t>(2 * n)));
    std::vector<std::size_t> drop;
    for (int j = n; j < 3 * n; ++j) drop.push_back(static_cast<std::size_t>(j));
    return fm_eliminate(joint, drop);
}

HPoly affine_image(const HPoly& p, const Mat& a, const Vec& b) {
    require(a.cols == static_cast<std::size_t>(p.dim), "DimensionMismatch",
            "affine_image: matrix columns must match polyhedron dimension");
    check_dim(b, a.rows, "affine_image offset");
    std::size_t n = a.cols, m = a.rows;
    HPoly joint = HPoly::whole_space(static_cast<int>(n + m));
    for (std::size_t i = 0; i < m; ++i) {
        LinCon eq{zero_vec(n + m), b[i]}; // y_i - <A_i, x> = b_i
        for (std::size_t j = 0; j < n; ++j) eq.a[j] = -a.at(i, j);
        eq.a[n + i] = 1;
        joint.eqs.push_back(std::move(eq));
    }
    joint = intersect(joint, embed(p, static_cast<int>(n + m), 0));
    std::vector<std::size_t> drop;
    for (std::size_t j = 0; j < n; ++j) drop.push_back(j);
    return fm_eliminate(joint, drop);
}

HPoly affine_preimage(const HPoly& p, const Mat& a, const Vec& b) {
    HPoly out = affine_preimage_system(p, a, b);
    tidy(out);
    return out;
}

AffineHull affine_hull(const HPoly& p) {
    p.validate();
    require(!is_empty(p), "EmptySet", "affine_hull of the empty set");
    AffineHull h;
    h.eqs = p.eqs;
    for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
        LPResult r = lp_solve(p.ineqs[i].a, Sense::Min, p);
        if (r.status == LPStatus::Optimal && r.value == p.ineqs[i].b) {
            h.implicit.push_back(i);
            h.eqs.push_back(p.ineqs[i]);
        }
    }
    std::vector<Vec> normals;
    for (const auto& c : h.eqs) normals.push_back(c.a);
    h.codim = static_cast<int>(rank_of_rows(normals, static_cast<std::size_t>(p.dim)));
    h.dim = p.dim - h.codim;
    return h;
}

Vec relative_interior_point(const HPoly& p) {
    AffineHull h = affine_hull(p); // throws EmptySet when p is empty
    std::vector<bool> implicit(p.ineqs.size(), false);
    for (auto i : h.implicit) implicit[i] = true;

    std::size_t n = static_cast<std::size_t>(p.dim);
    HPoly lifted = HPoly::whole_space(static_cast<int>(n) + 1);
    for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
        LinCon c{p.ineqs[i].a, p.ineqs[i].b};
        c.a.push_back(implicit[i] ? Rat(0) : Rat(1));
        lifted.ineqs.push_back(std::move(c));
    }
    for (const auto& e : p.eqs) {
        LinCon c{e.a, e.b};
        c.a.push_back(Rat(0));
        lifted.eqs.push_back(std::move(c));
    }
    lifted.ineqs.push_back(LinCon{unit_vec(n + 1, n), Rat(1)}); // sigma <= 1

    LPResult r = lp_solve(unit_vec(n + 1, n), Sense::Max, lifted);
    if (r.status != LPStatus::Optimal || r.value <= 0)
        throw std::logic_error("relative interior slack LP must have positive optimum");
    Vec x(r.point.begin(), r.point.end() - 1);
    for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
        if (!implicit[i]) {
            if (dot(p.ineqs[i].a, x) >= p.ineqs[i].b)
                throw std::logic_error("relative interior point lacks strict slack");
        }
    }
    return x;
}

HPoly recession_cone(const HPoly& p) {
    require(!is_empty(p), "EmptySet", "recession_cone of the empty set");
    return recession_cone_system(p);
}

SetRep rep_of(const HPoly& p) { return SetRep{dd_convert(p), p}; }
SetRep rep_of(const GenSet& g) { return SetRep{g, dd_reverse(g)}; }
SetRep rep_of(const PolyCone& c) {
    GenSet g = c.to_genset();
    return SetRep{g, dd_reverse(g)};
}

namespace {

// Each generator of `gens` against the constraints of `h`; nullopt when the
// inclusion holds.
std::optional<std::pair<Vec, GenKind>> inclusion_fails(const GenSet& gens, const HPoly& h) {
    for (const auto& pt : gens.points)
        if (!contains(h, pt)) return std::make_pair(pt, GenKind::Point);
    if (gens.is_empty_set()) return std::nullopt;
    for (const auto& r : gens.rays)
        if (!in_recession_cone(h, r)) return std::make_pair(r, GenKind::Ray);
    for (const auto& l : gens.lines)
        if (!in_lineality_space(h, l)) return std::make_pair(l, GenKind::Line);
    return std::nullopt;
}

} // namespace

EqualResult set_equal(const SetRep& lhs, const SetRep& rhs) {
    EqualResult res;
    if (auto bad = inclusion_fails(lhs.gens, rhs.hform)) {
        res.equal = false;
        res.counterexample = bad->first;
        res.cex_kind = bad->second;
        res.cex_from_lhs = true;
        return res;
    }
    if (auto bad = inclusion_fails(rhs.gens, lhs.hform)) {
        res.equal = false;
        res.counterexample = bad->first;
        res.cex_kind = bad->second;
        res.cex_from_lhs = false;
        return res;
    }
    res.equal = true;
    return res;
}

bool set_equal(const HPoly& p, const HPoly& q) {
    return set_equal(rep_of(p), rep_of(q)).equal;
}

bool set_equal(const GenSet& a, const GenSet& b) {
    return set_equal(rep_of(a), rep_of(b)).equal;
}

bool set_equal(const PolyCone& a, const PolyCone& b) {
    return set_equal(rep_of(a), rep_of(b)).equal;
}

const char* gen_kind_name(GenKind k) {
    switch (k) {
    case GenKind::Point: return "point";
    case GenKind::Ray: return "ray";
    case GenKind::Line: return "line";
    }
    return "point";
}

} // namespace polycalc

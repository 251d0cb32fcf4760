#include "polycalc/double_description.hpp"

#include <algorithm>
#include <stdexcept>

#include "polycalc/errors.hpp"

namespace polycalc {

namespace {

struct DDRay {
    Vec v;
    std::vector<bool> act; // act[i]: tight on processed row i
};

// Incremental double description for {z : <row_i, z> <= 0}, starting from
// the full space (lines = standard basis).  Rays carry the set of rows they
// are tight on; pairs (p, n) on opposite sides of a new row combine only if
// adjacent, tested combinatorially: no third ray may be tight on everything
// p and n are both tight on.  That test is exact as long as the ray list
// stays minimal, which the insertion rules below preserve.
class DDState {
public:
    explicit DDState(std::size_t dim) {
        for (std::size_t i = 0; i < dim; ++i) lines_.push_back(unit_vec(dim, i));
    }

    void add_row(const Vec& a) {
        std::size_t pivot = lines_.size();
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            if (dot(a, lines_[i]) != 0) { pivot = i; break; }
        }
        if (pivot < lines_.size()) {
            add_row_line_pivot(a, pivot);
        } else {
            add_row_combinatorial(a);
        }
        rows_.push_back(a);
    }

    const std::vector<DDRay>& rays() const { return rays_; }
    const std::vector<Vec>& lines() const { return lines_; }

private:
    // Some line crosses the hyperplane of the new row: the cone splits as
    // (cone cut to the hyperplane) + one new extreme ray.  Projecting every
    // generator along the crossing line realizes the cut exactly.
    void add_row_line_pivot(const Vec& a, std::size_t pivot) {
        Vec l0 = scale(Rat(-1) / dot(a, lines_[pivot]), lines_[pivot]);
        lines_.erase(lines_.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (auto& l : lines_) {
            Rat s = dot(a, l);
            if (s != 0) l = add(l, scale(s, l0));
        }
        for (auto& r : rays_) {
            Rat s = dot(a, r.v);
            if (s != 0) r.v = add(r.v, scale(s, l0));
            r.act.push_back(true);
        }
        DDRay fresh;
        fresh.v = std::move(l0);
        fresh.act.assign(rows_.size(), true);
        fresh.act.push_back(false);
        rays_.push_back(std::move(fresh));
    }

    void add_row_combinatorial(const Vec& a) {
        std::vector<Rat> side(rays_.size());
        for (std::size_t i = 0; i < rays_.size(); ++i) side[i] = dot(a, rays_[i].v);

        std::vector<DDRay> next;
        for (std::size_t i = 0; i < rays_.size(); ++i) {
            if (side[i] > 0) continue;
            DDRay keep = rays_[i];
            keep.act.push_back(side[i] == 0);
            next.push_back(std::move(keep));
        }
        for (std::size_t p = 0; p < rays_.size(); ++p) {
            if (side[p] <= 0) continue;
            for (std::size_t n = 0; n < rays_.size(); ++n) {
                if (side[n] >= 0) continue;
                if (!adjacent(p, n)) continue;
                DDRay w;
                w.v = add(scale(side[p], rays_[n].v), scale(-side[n], rays_[p].v));
                w.act.reserve(rows_.size() + 1);
                for (const auto& row : rows_) w.act.push_back(dot(row, w.v) == 0);
                w.act.push_back(true);
                next.push_back(std::move(w));
            }
        }
        rays_ = std::move(next);
    }

    bool adjacent(std::size_t p, std::size_t n) const {
        const auto& ap = rays_[p].act;
        const auto& an = rays_[n].act;
        for (std::size_t r = 0; r < rays_.size(); ++r) {
            if (r == p || r == n) continue;
            const auto& ar = rays_[r].act;
            bool covers = true;
            for (std::size_t i = 0; i < ap.size() && covers; ++i)
                if (ap[i] && an[i] && !ar[i]) covers = false;
            if (covers) return false;
        }
        return true;
    }

    std::vector<Vec> rows_;
    std::vector<DDRay> rays_;
    std::vector<Vec> lines_;
};

} // namespace

ConeGens cone_from_system(const std::vector<Vec>& ineq_rows,
                          const std::vector<Vec>& eq_rows, std::size_t dim) {
    for (const auto& r : ineq_rows) check_dim(r, dim, "cone inequality row");
    for (const auto& r : eq_rows) check_dim(r, dim, "cone equality row");

    // Restrict to the null space of the equality rows, run DD there, then
    // map generators back through the basis.
    std::vector<Vec> basis;
    bool restricted = !eq_rows.empty();
    if (restricted) {
        basis = nullspace(Mat::from_rows(eq_rows, dim));
        if (basis.empty()) return {};
    } else {
        for (std::size_t i = 0; i < dim; ++i) basis.push_back(unit_vec(dim, i));
    }
    std::size_t k = basis.size();

    DDState state(k);
    for (const auto& row : ineq_rows) {
        Vec reduced(k);
        for (std::size_t j = 0; j < k; ++j) reduced[j] = dot(row, basis[j]);
        state.add_row(reduced);
    }

    auto lift = [&](const Vec& z) {
        Vec y = zero_vec(dim);
        for (std::size_t j = 0; j < k; ++j)
            if (z[j] != 0) y = add(y, scale(z[j], basis[j]));
        return y;
    };

    ConeGens out;
    for (const auto& r : state.rays()) out.rays.push_back(lift(r.v));
    for (const auto& l : state.lines()) out.lines.push_back(lift(l));
    dedup_dirs(out.rays, false);
    dedup_dirs(out.lines, true);
    return out;
}

GenSet dd_convert(const HPoly& p) {
    p.validate();
    std::size_t n = static_cast<std::size_t>(p.dim);
    std::vector<Vec> ineq_rows, eq_rows;
    for (const auto& c : p.ineqs) {
        Vec row = c.a;
        row.push_back(-c.b);
        ineq_rows.push_back(std::move(row));
    }
    {
        Vec tpos = zero_vec(n + 1);
        tpos[n] = -1; // -t <= 0
        ineq_rows.push_back(std::move(tpos));
    }
    for (const auto& c : p.eqs) {
        Vec row = c.a;
        row.push_back(-c.b);
        eq_rows.push_back(std::move(row));
    }

    ConeGens cone = cone_from_system(ineq_rows, eq_rows, n + 1);
    GenSet g;
    g.dim = p.dim;
    for (const auto& r : cone.rays) {
        Vec x(r.begin(), r.end() - 1);
        const Rat& t = r.back();
        if (t > 0) {
            g.points.push_back(t == 1 ? std::move(x) : scale(Rat(1) / t, x));
        } else if (t == 0) {
            g.rays.push_back(std::move(x));
        } else {
            throw std::logic_error("homogenization ray with negative height");
        }
    }
    for (const auto& l : cone.lines) {
        if (l.back() != 0) throw std::logic_error("homogenization line with nonzero height");
        g.lines.emplace_back(l.begin(), l.end() - 1);
    }
    if (g.points.empty()) return GenSet{p.dim, {}, {}, {}};
    std::sort(g.points.begin(), g.points.end(), lex_less);
    g.points.erase(std::unique(g.points.begin(), g.points.end()), g.points.end());
    dedup_dirs(g.rays, false);
    dedup_dirs(g.lines, true);
    return g;
}

HPoly dd_reverse(const GenSet& g) {
    g.validate();
    if (g.is_empty_set()) return HPoly::empty(g.dim);
    std::size_t n = static_cast<std::size_t>(g.dim);

    // Polar side: admissible (a, beta) with <a,x> <= -beta on the set.
    std::vector<Vec> ineq_rows, eq_rows;
    for (const auto& p : g.points) {
        Vec row = p;
        row.push_back(Rat(1));
        ineq_rows.push_back(std::move(row));
    }
    for (const auto& r : g.rays) {
        Vec row = r;
        row.push_back(Rat(0));
        ineq_rows.push_back(std::move(row));
    }
    for (const auto& l : g.lines) {
        Vec row = l;
        row.push_back(Rat(0));
        eq_rows.push_back(std::move(row));
    }

    ConeGens polar = cone_from_system(ineq_rows, eq_rows, n + 1);
    HPoly out = HPoly::whole_space(g.dim);
    for (const auto& r : polar.rays)
        out.ineqs.push_back(LinCon{Vec(r.begin(), r.end() - 1), -r.back()});
    for (const auto& l : polar.lines)
        out.eqs.push_back(LinCon{Vec(l.begin(), l.end() - 1), -l.back()});
    tidy(out);
    return out;
}

PolyCone cone_from_hpoly(const HPoly& system) {
    require(contains(system, zero_vec(system.dim)), "NotInSet",
            "cone_from_hpoly: system does not contain the origin");
    GenSet g = dd_convert(system);
    PolyCone c;
    c.dim = system.dim;
    c.rays = g.rays;
    for (const auto& p : g.points)
        if (!is_zero(p)) c.rays.push_back(p);
    c.lines = g.lines;
    dedup_dirs(c.rays, false);
    return c;
}

HPoly cone_to_hpoly(const PolyCone& c) {
    return dd_reverse(c.to_genset());
}

} // namespace polycalc

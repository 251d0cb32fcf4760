#include "polycalc/polyhedron.hpp"

#include <algorithm>
#include <map>

#include "polycalc/errors.hpp"

namespace polycalc {

void HPoly::validate() const {
    require(dim >= 0, "DimensionMismatch", "negative dimension");
    for (const auto& c : ineqs) check_dim(c.a, dim, "HPoly inequality");
    for (const auto& c : eqs) check_dim(c.a, dim, "HPoly equality");
}

void GenSet::validate() const {
    require(dim >= 0, "DimensionMismatch", "negative dimension");
    for (const auto& v : points) check_dim(v, dim, "GenSet point");
    for (const auto& v : rays) check_dim(v, dim, "GenSet ray");
    for (const auto& v : lines) check_dim(v, dim, "GenSet line");
}

bool contains(const HPoly& p, const Vec& x) {
    check_dim(x, p.dim, "contains");
    for (const auto& c : p.ineqs)
        if (dot(c.a, x) > c.b) return false;
    for (const auto& c : p.eqs)
        if (dot(c.a, x) != c.b) return false;
    return true;
}

std::vector<std::size_t> active_set(const HPoly& p, const Vec& x) {
    require(contains(p, x), "NotInSet", "active_set: point outside the polyhedron");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < p.ineqs.size(); ++i)
        if (dot(p.ineqs[i].a, x) == p.ineqs[i].b) idx.push_back(i);
    return idx;
}

HPoly intersect(const HPoly& p, const HPoly& q) {
    require(p.dim == q.dim, "DimensionMismatch", "intersect: ambient dimensions differ");
    HPoly r = p;
    r.ineqs.insert(r.ineqs.end(), q.ineqs.begin(), q.ineqs.end());
    r.eqs.insert(r.eqs.end(), q.eqs.begin(), q.eqs.end());
    return r;
}

HPoly recession_cone_system(const HPoly& p) {
    HPoly r = p;
    for (auto& c : r.ineqs) c.b = 0;
    for (auto& c : r.eqs) c.b = 0;
    return r;
}

bool in_recession_cone(const HPoly& p, const Vec& d) {
    check_dim(d, p.dim, "in_recession_cone");
    for (const auto& c : p.ineqs)
        if (dot(c.a, d) > 0) return false;
    for (const auto& c : p.eqs)
        if (dot(c.a, d) != 0) return false;
    return true;
}

bool in_lineality_space(const HPoly& p, const Vec& d) {
    check_dim(d, p.dim, "in_lineality_space");
    for (const auto& c : p.ineqs)
        if (dot(c.a, d) != 0) return false;
    for (const auto& c : p.eqs)
        if (dot(c.a, d) != 0) return false;
    return true;
}

HPoly substitute_block(const HPoly& p, std::size_t start, const Vec& vals) {
    std::size_t k = vals.size();
    require(start + k <= static_cast<std::size_t>(p.dim), "DimensionMismatch",
            "substitute_block: block exceeds dimension");
    HPoly out;
    out.dim = p.dim - static_cast<int>(k);
    auto conv = [&](const LinCon& c) {
        LinCon n;
        n.a.reserve(out.dim);
        Rat shift = 0;
        for (std::size_t j = 0; j < c.a.size(); ++j) {
            if (j >= start && j < start + k)
                shift += c.a[j] * vals[j - start];
            else
                n.a.push_back(c.a[j]);
        }
        n.b = c.b - shift;
        return n;
    };
    for (const auto& c : p.ineqs) out.ineqs.push_back(conv(c));
    for (const auto& c : p.eqs) out.eqs.push_back(conv(c));
    return out;
}

HPoly embed(const HPoly& p, int total_dim, std::size_t offset) {
    require(offset + p.dim <= static_cast<std::size_t>(total_dim), "DimensionMismatch",
            "embed: block exceeds target dimension");
    HPoly out = HPoly::whole_space(total_dim);
    auto conv = [&](const LinCon& c) {
        LinCon n{zero_vec(total_dim), c.b};
        for (std::size_t j = 0; j < c.a.size(); ++j) n.a[offset + j] = c.a[j];
        return n;
    };
    for (const auto& c : p.ineqs) out.ineqs.push_back(conv(c));
    for (const auto& c : p.eqs) out.eqs.push_back(conv(c));
    return out;
}

HPoly affine_preimage_system(const HPoly& p, const Mat& a, const Vec& b) {
    require(a.rows == static_cast<std::size_t>(p.dim), "DimensionMismatch",
            "affine_preimage: matrix rows must match polyhedron dimension");
    check_dim(b, a.rows, "affine_preimage offset");
    HPoly out = HPoly::whole_space(static_cast<int>(a.cols));
    auto conv = [&](const LinCon& c) {
        return LinCon{mat_t_vec(a, c.a), c.b - dot(c.a, b)};
    };
    for (const auto& c : p.ineqs) out.ineqs.push_back(conv(c));
    for (const auto& c : p.eqs) out.eqs.push_back(conv(c));
    return out;
}

void scale_row(LinCon& c, bool is_eq) {
    for (const auto& x : c.a) {
        if (x == 0) continue;
        Rat s = is_eq ? x : abs(x);
        c.b /= s;
        for (auto& y : c.a) y /= s;
        return;
    }
}

bool lex_less(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

namespace {

bool row_less(const LinCon& x, const LinCon& y) {
    if (x.a != y.a) return lex_less(x.a, y.a);
    return x.b < y.b;
}

} // namespace

bool tidy(HPoly& p) {
    for (auto& c : p.ineqs) scale_row(c, false);
    for (auto& c : p.eqs) scale_row(c, true);

    std::vector<LinCon> eqs;
    for (auto& c : p.eqs) {
        if (is_zero(c.a)) {
            if (c.b != 0) { p = HPoly::empty(p.dim); return false; }
            continue;
        }
        eqs.push_back(std::move(c));
    }
    std::sort(eqs.begin(), eqs.end(), row_less);
    eqs.erase(std::unique(eqs.begin(), eqs.end(),
                          [](const LinCon& x, const LinCon& y) {
                              return x.a == y.a && x.b == y.b;
                          }),
              eqs.end());

    // Identical inequality normals: keep the smallest rhs.
    std::map<Vec, Rat, bool (*)(const Vec&, const Vec&)> best(lex_less);
    for (auto& c : p.ineqs) {
        if (is_zero(c.a)) {
            if (c.b < 0) { p = HPoly::empty(p.dim); return false; }
            continue;
        }
        auto [it, fresh] = best.emplace(std::move(c.a), c.b);
        if (!fresh && c.b < it->second) it->second = c.b;
    }
    std::vector<LinCon> ineqs;
    ineqs.reserve(best.size());
    for (auto& [a, b] : best) ineqs.push_back(LinCon{a, b});

    p.eqs = std::move(eqs);
    p.ineqs = std::move(ineqs);
    return true;
}

Vec primitive(const Vec& v, bool line) {
    if (is_zero(v)) return v;
    Int lcm_den = 1, gcd_num = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        lcm_den = lcm(lcm_den, Int(denominator(x)));
        gcd_num = gcd(gcd_num, Int(numerator(x)));
    }
    Rat s = Rat(lcm_den) / Rat(gcd_num); // positive: gcd > 0, lcm > 0
    Vec r = scale(s, v);
    if (line) {
        for (const auto& x : r) {
            if (x == 0) continue;
            if (x < 0) r = neg(r);
            break;
        }
    }
    return r;
}

void dedup_dirs(std::vector<Vec>& dirs, bool line) {
    std::vector<Vec> out;
    out.reserve(dirs.size());
    for (auto& d : dirs) {
        Vec p = primitive(d, line);
        if (!is_zero(p)) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    dirs = std::move(out);
}

} // namespace polycalc

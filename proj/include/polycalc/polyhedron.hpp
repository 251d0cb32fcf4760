#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polycalc/linalg.hpp"

namespace polycalc {

// One linear condition <a, x> <= b (inequality) or <a, x> = b (equality);
// which one it is depends on the list it lives in.
struct LinCon {
    Vec a;
    Rat b = 0;
};

// Convex polyhedron {x : <a_i,x> <= b_i, <c_j,x> = d_j} in H-form.
// Either list may be empty; dim 0 is allowed (the space {()}).
struct HPoly {
    int dim = 0;
    std::vector<LinCon> ineqs;
    std::vector<LinCon> eqs;

    static HPoly whole_space(int dim) { return HPoly{dim, {}, {}}; }

    // Canonical syntactically-empty polyhedron: 0 <= -1.
    static HPoly empty(int dim) {
        return HPoly{dim, {LinCon{zero_vec(dim), Rat(-1)}}, {}};
    }

    void validate() const;
};

// Generator description: conv(points) + cone(rays) + span(lines).
// No points means the empty set; rays/lines of an empty set are dropped by
// every producer, so `points.empty()` is the emptiness test.
struct GenSet {
    int dim = 0;
    std::vector<Vec> points;
    std::vector<Vec> rays;
    std::vector<Vec> lines;

    bool is_empty_set() const { return points.empty(); }
    void validate() const;
};

// Polyhedral cone given by generators; the apex 0 is always a member.
struct PolyCone {
    int dim = 0;
    std::vector<Vec> rays;
    std::vector<Vec> lines;

    GenSet to_genset() const {
        return GenSet{dim, {zero_vec(dim)}, rays, lines};
    }
};

bool contains(const HPoly& p, const Vec& x);

// Indices of inequalities tight at x (throws NotInSet if x is outside).
std::vector<std::size_t> active_set(const HPoly& p, const Vec& x);

HPoly intersect(const HPoly& p, const HPoly& q);

// {d : A d <= 0, C d = 0}; callers must ensure p is nonempty for this to be
// the recession cone of the set p describes.
HPoly recession_cone_system(const HPoly& p);

bool in_recession_cone(const HPoly& p, const Vec& d);
bool in_lineality_space(const HPoly& p, const Vec& d);

// Constraints of p restricted to x[start .. start+vals.size()) = vals,
// expressed over the remaining coordinates in their original order.
HPoly substitute_block(const HPoly& p, std::size_t start, const Vec& vals);

// Constraints of p lifted into dimension total_dim, acting on coordinates
// [offset, offset + p.dim).
HPoly embed(const HPoly& p, int total_dim, std::size_t offset);

// {x : A x + b in p} for A of shape p.dim x n.
HPoly affine_preimage_system(const HPoly& p, const Mat& a, const Vec& b);

// --- syntactic cleanup helpers (no LP involved) ---

// Scales a row so its first nonzero coefficient has absolute value 1
// (equalities: exactly 1).  Zero rows are left alone.
void scale_row(LinCon& c, bool is_eq);

// Drops trivially-true constant rows, collapses duplicate normals (keeping
// the tightest rhs), sorts rows.  Returns false and leaves p in canonical
// empty form when a constant row is infeasible.
bool tidy(HPoly& p);

// Smallest positive multiple of v with integer coprime entries; sign is
// preserved for `ray`, for `line` the first nonzero entry is made positive.
Vec primitive(const Vec& v, bool line);

// Deduplicates rays/lines after primitive() normalization, dropping zeros.
void dedup_dirs(std::vector<Vec>& dirs, bool line);

bool lex_less(const Vec& a, const Vec& b);

} // namespace polycalc

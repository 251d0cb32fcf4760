#pragma once

#include <optional>
#include <string>

#include "polycalc/double_description.hpp"
#include "polycalc/lp.hpp"

namespace polycalc {

bool is_empty(const HPoly& p);

// A feasible point when one exists.
std::optional<Vec> find_point(const HPoly& p);

// Exact projection dropping the listed coordinates (surviving coordinates
// keep their original order).  Equalities are eliminated by Gaussian
// pivoting first, the rest by Fourier-Motzkin; after each eliminated
// variable the system is tidied and LP-tested for redundant rows, which is
// what keeps intermediate growth in check.
HPoly fm_eliminate(const HPoly& p, std::vector<std::size_t> drop);

// LP-based removal of redundant inequalities (plus syntactic tidy).
// An infeasible input collapses to the canonical empty form.
HPoly remove_redundancy(HPoly p);

HPoly minkowski_sum(const HPoly& p, const HPoly& q);

// {A x + b : x in p}, computed by projecting the graph of the map.
HPoly affine_image(const HPoly& p, const Mat& a, const Vec& b);

// {x : A x + b in p}; pure substitution, no projection involved.
HPoly affine_preimage(const HPoly& p, const Mat& a, const Vec& b);

struct AffineHull {
    std::vector<LinCon> eqs;           // a system defining aff(p)
    int dim = 0;                       // dim aff(p)
    int codim = 0;
    std::vector<std::size_t> implicit; // inequalities tight on all of p
};

// Throws EmptySet on the empty polyhedron.
AffineHull affine_hull(const HPoly& p);

// A point with exact strict slack in every non-implicit inequality.
// Throws EmptySet on the empty polyhedron.
Vec relative_interior_point(const HPoly& p);

HPoly recession_cone(const HPoly& p); // throws EmptySet when p is empty

enum class GenKind { Point, Ray, Line };

// Outcome of an exact set comparison.  On inequality, `counterexample` is a
// generator of the offending side (`cex_from_lhs`) that the other side's
// H-form rejects, so the verdict can be re-checked by plain substitution.
struct EqualResult {
    bool equal = false;
    std::optional<Vec> counterexample;
    GenKind cex_kind = GenKind::Point;
    bool cex_from_lhs = true;
};

// Generator/H-form pair naming one set both ways; every comparison below
// reduces to these.
struct SetRep {
    GenSet gens;
    HPoly hform;
};

SetRep rep_of(const HPoly& p);
SetRep rep_of(const GenSet& g);
SetRep rep_of(const PolyCone& c);

// Mutual inclusion: each generator of one side is tested against the other
// side's H-form (points by membership, rays by recession, lines by
// lineality).
EqualResult set_equal(const SetRep& lhs, const SetRep& rhs);

bool set_equal(const HPoly& p, const HPoly& q);
bool set_equal(const GenSet& a, const GenSet& b);
bool set_equal(const PolyCone& a, const PolyCone& b);

const char* gen_kind_name(GenKind k);

} // namespace polycalc

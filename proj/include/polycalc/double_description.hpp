#pragma once

#include "polycalc/polyhedron.hpp"

namespace polycalc {

// Generators of the cone {y : <m_i,y> <= 0 for all i, <e_j,y> = 0 for all j}:
// the cone equals cone(rays) + span(lines).  Both lists are primitive-vector
// normalized and deduplicated.
struct ConeGens {
    std::vector<Vec> rays;
    std::vector<Vec> lines;
};

ConeGens cone_from_system(const std::vector<Vec>& ineq_rows,
                          const std::vector<Vec>& eq_rows, std::size_t dim);

// H-form to generators, via double description of the homogenization
// {(x,t) : A x <= b t, C x = d t, t >= 0}.  Empty sets come back with no
// points, no rays and no lines.
GenSet dd_convert(const HPoly& p);

// Generators to H-form, via the polar cone of the homogenization.  The
// empty generator set maps to the canonical empty polyhedron.
HPoly dd_reverse(const GenSet& g);

// Generator view of a cone given in H-form (the set must be a cone; the
// apex 0 is checked).  Points other than the apex fold into rays.
PolyCone cone_from_hpoly(const HPoly& system);

HPoly cone_to_hpoly(const PolyCone& c);

} // namespace polycalc

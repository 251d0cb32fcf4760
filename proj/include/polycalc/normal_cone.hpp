#pragma once

#include "polycalc/report.hpp"

namespace polycalc {

// N(x; p) from the active constraints: the conic hull of the active
// inequality normals plus the span of the equality normals.
PolyCone normal_cone(const HPoly& p, const Vec& x);

// Independent route to the same cone, straight from the definition
// {v : <v, y - x> <= 0 for all y in p} using a generator description of p.
// Shares nothing with normal_cone() above except the DD kernel.
PolyCone normal_cone_oracle(const HPoly& p, const Vec& x);

// H-form of N(x; p), for slicing and joint systems.
HPoly normal_cone_hform(const HPoly& p, const Vec& x);

// N(x; p cap q) versus N(x; p) + N(x; q), both as exact generator sets.
RuleReport check_intersection_rule(const HPoly& p, const HPoly& q, const Vec& x);

} // namespace polycalc

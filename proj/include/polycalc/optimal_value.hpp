#pragma once

#include "polycalc/functions.hpp"

namespace polycalc {

// Data of the optimal-value function mu(x) = inf { phi(x, y) : y in F(x) }:
// an objective over (x, y) and a constraint mapping x => F(x).
struct OvfInstance {
    PolyFunc phi; // over R^{nx + ny}
    PolyMap f;    // R^nx => R^ny

    void validate() const;
};

// mu as a polyhedral function of x; the infimum is attained wherever
// finite, so projecting the joint epigraph is exact.  Throws ImproperValue
// when mu degenerates (-infinity somewhere or +infinity everywhere).
PolyFunc mu_function(const OvfInstance& inst);

// argmin { phi(x, y) : y in F(x) } at a fixed x in dom mu.
HPoly solution_set(const OvfInstance& inst, const Vec& x);

// d mu(x) against the union over (u, v) in dphi(x, ybar) of
// u + D*F(x, ybar)(v), realized as one projection.  ybar must solve the
// inner problem at x (NotASolution otherwise).
RuleReport check_ovf_rule(const OvfInstance& inst, const Vec& x, const Vec& ybar);

} // namespace polycalc

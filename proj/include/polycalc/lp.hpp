#pragma once

#include "polycalc/polyhedron.hpp"

namespace polycalc {

enum class Sense { Min, Max };
enum class LPStatus { Optimal, Infeasible, Unbounded };

// Outcome of an exact LP solve over an HPoly with m1 inequalities and m2
// equalities.  Multiplier vectors are indexed inequality block first, then
// equality block, matching the constraint order of the input polyhedron.
//
// Optimal:    `point` attains `value` (in the caller's sense) and `dual`
//             certifies it for the minimization form: with g = c for Min and
//             g = -c for Max,  g + A^T dual_1 + C^T dual_2 = 0,  dual_1 >= 0,
//             and the minimal value of g^T x equals -<dual, (b; d)>.
// Infeasible: `farkas` satisfies  A^T f_1 + C^T f_2 = 0,  f_1 >= 0  and
//             <f, (b; d)> < 0, so the system implies 0 <= negative.
// Unbounded:  `ray` is a recession direction of the feasible set that
//             strictly improves the objective; `point` is a feasible point.
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rat value = 0;
    Vec point;
    Vec dual;
    Vec farkas;
    Vec ray;
};

LPResult lp_solve(const Vec& objective, Sense sense, const HPoly& p);

// Re-derives every certificate condition above from scratch; used by tests
// and the verification harness to keep the solver honest.
bool lp_certificate_ok(const Vec& objective, Sense sense, const HPoly& p,
                       const LPResult& res);

} // namespace polycalc

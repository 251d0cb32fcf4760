#pragma once

#include <optional>

#include "polycalc/polyhedron_ops.hpp"

namespace polycalc {

enum class SepVerdict { Separable, NotSeparable };

// Separation of p from omega in the relative sense: a Separable result
// carries (x_star, alpha) with <x_star, x> <= alpha on p, alpha <= <x_star, y>
// on omega, and a witness y_hat in omega with alpha < <x_star, y_hat>.
// NotSeparable carries a point of p meeting the relative interior of omega;
// exactly one of the two situations occurs.
struct SepResult {
    SepVerdict verdict = SepVerdict::NotSeparable;
    Vec x_star;
    Rat alpha = 0;
    std::optional<Vec> witness;
    std::optional<Vec> common_point;
};

// Throws EmptyInput when either set is empty.
SepResult separate(const HPoly& p, const HPoly& omega);

// Recasts equalities as inequality pairs; the result has no equality rows
// and describes the same set.
HPoly gpcs_to_pcs(const HPoly& q);

// Rank of the equality system (the codimension of its solution set when
// consistent).
std::size_t codim(const HPoly& m);

// Re-derives every guarantee of a SepResult from scratch; used by tests and
// the verification harness.
bool separation_certificate_ok(const HPoly& p, const HPoly& omega, const SepResult& res);

} // namespace polycalc

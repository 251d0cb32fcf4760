#pragma once

#include <optional>
#include <string>

#include "polycalc/polyhedron_ops.hpp"

namespace polycalc {

// Outcome of one calculus-rule verification.  Both sides are reported as
// generator sets so a reader can re-check the verdict; on failure the
// counterexample is a generator of one side that the other side rejects.
struct RuleReport {
    std::string rule;
    std::string instance_digest; // filled by the verification harness
    bool equal = false;
    GenSet lhs;
    GenSet rhs;
    std::optional<Vec> counterexample;
    std::string cex_kind;  // "point", "ray" or "line" when unequal
    std::string note;      // extra context (failing side, special cases)
    double elapsed_ms = 0; // wall time; never serialized
};

inline RuleReport make_report(std::string rule, const SetRep& lhs, const SetRep& rhs,
                              std::string note = {}) {
    RuleReport rep;
    rep.rule = std::move(rule);
    rep.lhs = lhs.gens;
    rep.rhs = rhs.gens;
    rep.note = std::move(note);
    EqualResult eq = set_equal(lhs, rhs);
    rep.equal = eq.equal;
    if (!eq.equal) {
        rep.counterexample = eq.counterexample;
        rep.cex_kind = gen_kind_name(eq.cex_kind);
        std::string side = eq.cex_from_lhs ? "lhs generator outside rhs"
                                           : "rhs generator outside lhs";
        rep.note = rep.note.empty() ? side : rep.note + "; " + side;
    }
    return rep;
}

} // namespace polycalc

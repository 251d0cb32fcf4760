#pragma once

#include <iosfwd>

#include "polycalc/instance_gen.hpp"
#include "polycalc/json_io.hpp"
#include "polycalc/report.hpp"

namespace polycalc {

struct VerifyConfig {
    std::uint64_t seed = 0;
    int instances = 25;             // per rule
    int max_dim = 4;
    long coeff_bound = 4;           // bound on generated numerators/denominators
    std::vector<std::string> rules; // empty: every verify rule
    bool sabotage = false;          // corrupt one side of each comparison
    std::ostream* stream = nullptr; // JSONL, one line per instance
};

// One executed check: the report plus a JSON description of the inputs
// sufficient to rebuild and re-run the instance.
struct RuleRun {
    RuleReport report;
    Json instance;
};

struct RuleStats {
    std::string rule;
    int total = 0;
    int failed = 0;
};

struct VerifySummary {
    std::uint64_t seed = 0;
    int instances = 0;
    bool sabotage = false;
    std::vector<RuleStats> rules;
    std::vector<Json> failures; // failing report lines with their instances
    int total = 0;
    int failed = 0;

    bool ok() const { return failed == 0; }
};

// The rule streams `verify` accepts.  Two further streams exist for the
// acceptance suite ("normal-cone" and "subdifferential-sum") and can be
// driven through run_rule_instance directly.
const std::vector<std::string>& verify_rules();
bool is_verify_rule(const std::string& name);

// Instance `index` of the named rule stream: generation is a pure function
// of (cfg.seed, rule, index), so any instance can be rebuilt in isolation.
RuleRun run_rule_instance(const std::string& rule, const VerifyConfig& cfg, int index);

// In sabotage mode every lhs is corrupted before the comparison, so a
// healthy checker reports every instance as failed.
VerifySummary run_verify(const VerifyConfig& cfg);

Json summary_json(const VerifySummary& s);

} // namespace polycalc

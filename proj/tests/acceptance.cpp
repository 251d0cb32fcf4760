// Acceptance gate: drives every calculus rule at full scale on the seeded
// instance streams and prints one PASS/FAIL line per criterion.  Exits
// nonzero when any criterion fails, so ctest can gate on it directly.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polycalc/verify.hpp"

using namespace polycalc;

namespace {

int g_failures = 0;

void line(bool ok, const std::string& label, const std::string& detail = {}) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

VerifyConfig base_config() {
    VerifyConfig cfg;
    cfg.seed = 42;
    cfg.max_dim = 4;
    cfg.coeff_bound = 4;
    return cfg;
}

// Runs `count` instances of one rule stream, feeding each run to `inspect`;
// returns the number of failed comparisons.
template <class F>
int sweep(const std::string& rule, int count, const VerifyConfig& cfg, F&& inspect) {
    int failed = 0;
    for (int i = 0; i < count; ++i) {
        RuleRun run = run_rule_instance(rule, cfg, i);
        if (!run.report.equal) ++failed;
        inspect(i, run);
    }
    return failed;
}

int sweep(const std::string& rule, int count, const VerifyConfig& cfg) {
    return sweep(rule, count, cfg, [](int, const RuleRun&) {});
}

// How many distinct vectors a JSON array of vectors holds.
std::size_t distinct_count(const Json& arr) {
    std::set<std::string> seen;
    for (const auto& v : arr) seen.insert(v.dump());
    return seen.size();
}

// Independent decision of "p meets ri(omega)" by one slack-maximization LP:
// maximize t subject to x in p, x in aff(omega) and <a_i, x> + t <= b_i for
// every non-implicit inequality of omega; the relative interior is hit
// exactly when the optimum is positive.
bool meets_relative_interior(const HPoly& p, const HPoly& omega) {
    AffineHull hull = affine_hull(omega);
    std::size_t n = static_cast<std::size_t>(p.dim);
    auto lift = [&](const LinCon& c, const Rat& tcoef) {
        Vec a = c.a;
        a.push_back(tcoef);
        return LinCon{std::move(a), c.b};
    };
    HPoly sys;
    sys.dim = p.dim + 1;
    for (const auto& c : p.ineqs) sys.ineqs.push_back(lift(c, Rat(0)));
    for (const auto& c : p.eqs) sys.eqs.push_back(lift(c, Rat(0)));
    for (const auto& c : hull.eqs) sys.eqs.push_back(lift(c, Rat(0)));
    std::vector<bool> implicit(omega.ineqs.size(), false);
    for (auto i : hull.implicit) implicit[i] = true;
    for (std::size_t i = 0; i < omega.ineqs.size(); ++i)
        sys.ineqs.push_back(lift(omega.ineqs[i], implicit[i] ? Rat(0) : Rat(1)));
    Vec cap = zero_vec(n + 1);
    cap[n] = 1;
    sys.ineqs.push_back(LinCon{cap, Rat(1)}); // t <= 1 keeps the LP bounded
    Vec obj = zero_vec(n + 1);
    obj[n] = 1;
    LPResult r = lp_solve(obj, Sense::Max, sys);
    return r.status == LPStatus::Optimal && r.value > 0;
}

void criterion_normal_cone(const VerifyConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    int failed = sweep("normal-cone", 500, cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::ostringstream d;
    d << "500 instances, dims 1-4, " << ms << " ms";
    line(failed == 0 && ms < 60000, "normal cone formula agrees with the support oracle",
         d.str());
}

void criterion_intersection(const VerifyConfig& cfg) {
    int failed = sweep("intersection", 300, cfg);
    line(failed == 0, "intersection rule holds on 300 instances");
}

void criterion_sum(const VerifyConfig& cfg) {
    int indicator = 0, multi_split = 0, bad_split_sets = 0;
    int failed = sweep("sum", 300, cfg, [&](int, const RuleRun& run) {
        if (run.instance["indicator"].get<bool>()) ++indicator;
        const Json& splits = run.instance["splits"];
        std::size_t distinct = distinct_count(splits);
        if (splits.size() > 1) {
            ++multi_split;
            // a split set of dimension >= 1 must contribute >= 3 distinct splits
            if (distinct < 3) ++bad_split_sets;
        }
    });
    std::ostringstream d;
    d << indicator << " indicator summands, " << multi_split
      << " instances with >= 3 distinct splits";
    line(failed == 0 && indicator >= 50 && bad_split_sets == 0 && multi_split > 0,
         "coderivative sum rule holds on 300 instances across all splits", d.str());
}

void criterion_chain(const VerifyConfig& cfg) {
    int multi = 0, bad = 0;
    int failed = sweep("chain", 300, cfg, [&](int, const RuleRun& run) {
        const Json& ybars = run.instance["ybars"];
        std::size_t distinct = distinct_count(ybars);
        if (ybars.size() > 1) {
            ++multi;
            if (distinct < 3) ++bad;
        }
    });
    std::ostringstream d;
    d << multi << " instances with >= 3 intermediate points";
    line(failed == 0 && bad == 0 && multi > 0,
         "chain rule holds on 300 instances across intermediate points", d.str());
}

void criterion_preimage(const VerifyConfig& cfg) {
    int failed = sweep("preimage", 300, cfg);
    line(failed == 0, "preimage rule holds on 300 instances");
}

void criterion_sublevel(const VerifyConfig& cfg) {
    int failed_single = sweep("sublevel", 300, cfg);
    int restricted = 0, continuous = 0;
    int failed_multi = sweep("multi-sublevel", 300, cfg, [&](int, const RuleRun& run) {
        if (run.instance["restricted"].get<bool>()) ++restricted;
        if (run.instance["continuous"].get<bool>()) ++continuous;
    });
    std::ostringstream d;
    d << restricted << " with a restricted domain, " << continuous
      << " fully continuous";
    line(failed_single == 0 && failed_multi == 0 && restricted >= 50 && continuous > 0,
         "sublevel normal-cone formulas hold on 300 single + 300 multi instances",
         d.str());
}

void criterion_subdiff(const VerifyConfig& cfg) {
    int failed_sum = sweep("subdifferential-sum", 300, cfg);
    int failed_affine = sweep("affine-chain", 300, cfg);
    line(failed_sum == 0 && failed_affine == 0,
         "subdifferential sum and affine chain rules hold on 300 instances each");
}

void criterion_ovf(const VerifyConfig& cfg) {
    int multi = 0, bad = 0;
    int failed = sweep("ovf", 300, cfg, [&](int, const RuleRun& run) {
        const Json& ybars = run.instance["ybars"];
        std::size_t distinct = distinct_count(ybars);
        if (ybars.size() > 1) {
            ++multi;
            if (distinct < 3) ++bad;
        }
    });
    std::ostringstream d;
    d << multi << " instances with >= 3 solution points";
    line(failed == 0 && bad == 0 && multi > 0,
         "optimal-value subdifferential formula holds on 300 instances", d.str());
}

void criterion_monotone(const VerifyConfig& cfg) {
    int negatives = 0, bad_negative = 0;
    int failed = sweep("monotone-compose", 220, cfg, [&](int, const RuleRun& run) {
        if (!run.instance["negative"].get<bool>()) return;
        ++negatives;
        if (run.report.note.find("NotMonotone") == std::string::npos) ++bad_negative;
    });
    std::ostringstream d;
    d << 220 - negatives << " compositions verified, " << negatives
      << " non-monotone inputs rejected";
    line(failed == 0 && negatives == 20 && bad_negative == 0,
         "monotone composition rule holds and rejects non-monotone outer functions",
         d.str());
}

void criterion_separation(const VerifyConfig& cfg) {
    int mismatches = 0, separable = 0, contact = 0;
    int failed = sweep("separation", 300, cfg, [&](int, const RuleRun& run) {
        HPoly p = hpoly_from_json(run.instance["p"]);
        HPoly omega = hpoly_from_json(run.instance["omega"]);
        bool verdict_sep = run.instance["result"]["verdict"] == Json("separable");
        (verdict_sep ? separable : contact) += 1;
        // separable must coincide with an empty intersection against ri(omega)
        bool meets = meets_relative_interior(p, omega);
        if (verdict_sep != !meets) ++mismatches;
    });
    std::ostringstream d;
    d << separable << " separable, " << contact << " not separable, all certificates re-checked";
    line(failed == 0 && mismatches == 0 && separable > 0 && contact > 0,
         "separation verdicts match the independent relative-interior LP on 300 pairs",
         d.str());
}

void criterion_geometry(const VerifyConfig& cfg) {
    int failed_dd = sweep("dd-roundtrip", 500, cfg);
    int failed_fm = sweep("fm-vs-dd", 500, cfg);
    line(failed_dd == 0 && failed_fm == 0,
         "geometry kernel: 500 conversion round trips and 500 projection cross-checks");
}

void criterion_determinism() {
    auto run = [] {
        std::ostringstream out;
        VerifyConfig cfg = base_config();
        cfg.instances = 3;
        cfg.stream = &out;
        VerifySummary s = run_verify(cfg);
        out << summary_json(s).dump() << "\n";
        return out.str();
    };
    std::string first = run();
    std::string second = run();
    std::ostringstream d;
    d << first.size() << " bytes per report";
    line(first == second && !first.empty(),
         "seeded verification reports are byte-identical across runs", d.str());
}

} // namespace

int main() {
    VerifyConfig cfg = base_config();
    criterion_normal_cone(cfg);
    criterion_intersection(cfg);
    criterion_sum(cfg);
    criterion_chain(cfg);
    criterion_preimage(cfg);
    criterion_sublevel(cfg);
    criterion_subdiff(cfg);
    criterion_ovf(cfg);
    criterion_monotone(cfg);
    criterion_separation(cfg);
    criterion_geometry(cfg);
    criterion_determinism();

    if (g_failures == 0) {
        std::cout << "all acceptance criteria satisfied" << std::endl;
        return 0;
    }
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
}

#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "test_util.hpp"

using namespace testutil;

TEST_CASE("the rule roster is fixed") {
    const auto& rules = verify_rules();
    CHECK(rules.size() == 12);
    for (const char* r : {"intersection", "sum", "chain", "preimage", "sublevel",
                          "multi-sublevel", "affine-chain", "monotone-compose", "ovf",
                          "separation", "dd-roundtrip", "fm-vs-dd"}) {
        CHECK(std::find(rules.begin(), rules.end(), r) != rules.end());
        CHECK(is_verify_rule(r));
    }
    CHECK_FALSE(is_verify_rule("no-such-rule"));
}

TEST_CASE("unknown rule names are rejected up front") {
    VerifyConfig cfg;
    cfg.rules = {"intersection", "bogus"};
    CHECK_THROWS_AS(run_verify(cfg), std::invalid_argument);
}

TEST_CASE("instances are a pure function of seed, rule and index") {
    VerifyConfig cfg;
    cfg.seed = 7;
    RuleRun a = run_rule_instance("intersection", cfg, 4);
    RuleRun b = run_rule_instance("intersection", cfg, 4);
    CHECK(to_json(a.report).dump() == to_json(b.report).dump());
    CHECK(a.instance.dump() == b.instance.dump());

    VerifyConfig other = cfg;
    other.seed = 8;
    RuleRun c = run_rule_instance("intersection", other, 4);
    CHECK(a.instance.dump() != c.instance.dump());
}

TEST_CASE("a small sweep over every rule passes") {
    VerifyConfig cfg;
    cfg.seed = 42;
    cfg.instances = 2;
    VerifySummary s = run_verify(cfg);
    CHECK(s.ok());
    CHECK(s.total == 2 * 12);
    CHECK(s.failed == 0);
    CHECK(s.rules.size() == 12);
    for (const auto& r : s.rules) {
        CHECK(r.total == 2);
        CHECK(r.failed == 0);
    }
}

TEST_CASE("streamed reports are byte-identical across runs") {
    auto run = [] {
        std::ostringstream out;
        VerifyConfig cfg;
        cfg.seed = 42;
        cfg.instances = 3;
        cfg.rules = {"intersection", "sum", "separation", "dd-roundtrip"};
        cfg.stream = &out;
        VerifySummary s = run_verify(cfg);
        out << summary_json(s).dump() << "\n";
        return out.str();
    };
    std::string first = run();
    std::string second = run();
    CHECK(first == second);
    CHECK_FALSE(first.empty());
}

TEST_CASE("sabotage mode trips every comparison") {
    VerifyConfig cfg;
    cfg.seed = 11;
    cfg.instances = 2;
    cfg.sabotage = true;
    cfg.rules = {"intersection", "sum", "chain", "sublevel", "ovf"};
    VerifySummary s = run_verify(cfg);
    CHECK_FALSE(s.ok());
    CHECK(s.failed == s.total);
    CHECK(s.failures.size() == static_cast<std::size_t>(s.total));
    for (const auto& line : s.failures) {
        CHECK(line.contains("instance"));
        CHECK_FALSE(line["equal"].get<bool>());
    }
}

TEST_CASE("acceptance-only streams run through the same entry point") {
    VerifyConfig cfg;
    cfg.seed = 3;
    for (int i = 0; i < 3; ++i) {
        RuleRun nc = run_rule_instance("normal-cone", cfg, i);
        CHECK(nc.report.equal);
        RuleRun ss = run_rule_instance("subdifferential-sum", cfg, i);
        CHECK(ss.report.equal);
    }
}

TEST_CASE("instance schedules hit the required flavors") {
    VerifyConfig cfg;
    cfg.seed = 42;

    RuleRun ind = run_rule_instance("sum", cfg, 3); // every fourth uses an indicator summand
    CHECK(ind.instance["indicator"].get<bool>());
    CHECK(ind.report.equal);

    RuleRun plain = run_rule_instance("sum", cfg, 2);
    CHECK_FALSE(plain.instance["indicator"].get<bool>());

    RuleRun restricted = run_rule_instance("multi-sublevel", cfg, 4);
    CHECK(restricted.instance["restricted"].get<bool>());

    RuleRun negative = run_rule_instance("monotone-compose", cfg, 10);
    CHECK(negative.instance["negative"].get<bool>());
    CHECK(negative.report.equal);
    CHECK(negative.report.note.find("NotMonotone") != std::string::npos);
}

TEST_CASE("summary JSON carries the run parameters") {
    VerifyConfig cfg;
    cfg.seed = 9;
    cfg.instances = 1;
    cfg.rules = {"dd-roundtrip"};
    VerifySummary s = run_verify(cfg);
    Json j = summary_json(s);
    CHECK(j["seed"].get<std::uint64_t>() == 9);
    CHECK(j["instances"].get<int>() == 1);
    CHECK(j["mode"] == Json("verify"));
    CHECK(j["rules"].size() == 1);
    CHECK(j["ok"].get<bool>());
}

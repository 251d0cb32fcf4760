#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polycalc/double_description.hpp"
#include "polycalc/json_io.hpp"
#include "polycalc/mappings.hpp"
#include "polycalc/normal_cone.hpp"
#include "polycalc/optimal_value.hpp"
#include "polycalc/separation.hpp"
#include "polycalc/verify.hpp"

namespace {

using namespace polycalc;

Vec parse_point(const std::string& text) {
    Vec v;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        std::size_t a = pos, b = end;
        while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
        v.push_back(parse_rat(text.substr(a, b - a)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return v;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

struct Emitter {
    bool compact = false;
    std::string path; // empty: stdout

    void emit(const Json& j) const {
        std::string text = (compact ? j.dump() : j.dump(2)) + "\n";
        if (path.empty())
            std::cout << text;
        else
            write_text(path, text);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus for polyhedral convex sets, mappings and functions"};
    app.require_subcommand(1);

    bool compact = false;
    std::string out_path;
    std::uint64_t seed = 0;
    app.add_flag("--json", compact, "compact single-line JSON output");
    app.add_option("--out", out_path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "seed for the verification harness");

    std::string in_a, in_b, point_str, vstar_str, gamma_str;

    auto* c_ncone = app.add_subcommand("normal-cone", "normal cone to a polyhedron at a point");
    c_ncone->add_option("input", in_a, "polyhedron JSON file")->required();
    c_ncone->add_option("--point", point_str, "base point, comma-separated rationals")->required();

    auto* c_subdiff = app.add_subcommand("subdiff", "subdifferential of a function at a point");
    c_subdiff->add_option("input", in_a, "function JSON file")->required();
    c_subdiff->add_option("--point", point_str, "base point")->required();

    auto* c_ssubdiff =
        app.add_subcommand("singular-subdiff", "singular subdifferential at a point");
    c_ssubdiff->add_option("input", in_a, "function JSON file")->required();
    c_ssubdiff->add_option("--point", point_str, "base point")->required();

    auto* c_coder = app.add_subcommand("coderivative", "coderivative of a mapping");
    c_coder->add_option("input", in_a, "mapping JSON file")->required();
    c_coder->add_option("--point", point_str, "graph point (x,y), concatenated")->required();
    c_coder->add_option("--vstar", vstar_str, "argument v*")->required();

    auto* c_summap = app.add_subcommand("sum-map", "sum of two set-valued mappings");
    c_summap->add_option("first", in_a, "mapping JSON file")->required();
    c_summap->add_option("second", in_b, "mapping JSON file")->required();

    auto* c_compose = app.add_subcommand("compose-map", "composition G after F");
    c_compose->add_option("outer", in_a, "outer mapping G JSON file")->required();
    c_compose->add_option("inner", in_b, "inner mapping F JSON file")->required();

    auto* c_preimage = app.add_subcommand("preimage", "preimage of a set under a mapping");
    c_preimage->add_option("mapping", in_a, "mapping JSON file")->required();
    c_preimage->add_option("set", in_b, "polyhedron JSON file")->required();

    auto* c_sublevel = app.add_subcommand("sublevel-cone", "normal cone to a sublevel set");
    c_sublevel->add_option("input", in_a, "function JSON file")->required();
    c_sublevel->add_option("--gamma", gamma_str, "level")->required();
    c_sublevel->add_option("--point", point_str, "base point on the level set")->required();

    auto* c_mu = app.add_subcommand("mu", "optimal value function of an instance");
    c_mu->add_option("input", in_a, "optimal-value instance JSON file")->required();

    auto* c_sols = app.add_subcommand("solution-set", "inner solution set at a point");
    c_sols->add_option("input", in_a, "optimal-value instance JSON file")->required();
    c_sols->add_option("--point", point_str, "outer point x")->required();

    auto* c_ovfsub = app.add_subcommand("ovf-subdiff", "subdifferential of the value function");
    c_ovfsub->add_option("input", in_a, "optimal-value instance JSON file")->required();
    c_ovfsub->add_option("--point", point_str, "outer point x")->required();

    auto* c_sep = app.add_subcommand("separate", "separate a polyhedron from a target set");
    c_sep->add_option("first", in_a, "polyhedron JSON file")->required();
    c_sep->add_option("second", in_b, "target polyhedron JSON file")->required();

    auto* c_topcs = app.add_subcommand("to-pcs", "rewrite equalities as inequality pairs");
    c_topcs->add_option("input", in_a, "polyhedron JSON file")->required();

    auto* c_verify = app.add_subcommand("verify", "run the seeded verification harness");
    int instances = 25;
    int max_dim = 4;
    long coeff_bound = 4;
    bool sabotage = false;
    std::vector<std::string> rules;
    c_verify->add_option("--instances", instances, "instances per rule")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--max-dim", max_dim, "dimension cap")->check(CLI::PositiveNumber);
    c_verify->add_option("--coeff-bound", coeff_bound, "coefficient bound")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--rules", rules, "subset of rules to run")
        ->delimiter(',')
        ->check(CLI::IsMember(verify_rules()));
    c_verify->add_flag("--sabotage", sabotage,
                       "corrupt every comparison; a healthy checker fails all instances");

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Emitter emit{compact, out_path};
    try {
        if (c_ncone->parsed()) {
            HPoly p = hpoly_from_json(parse_json_file(in_a));
            emit.emit(to_json(normal_cone(p, parse_point(point_str)).to_genset()));
        } else if (c_subdiff->parsed()) {
            PolyFunc f = func_from_json(parse_json_file(in_a));
            emit.emit(to_json(subdifferential(f, parse_point(point_str))));
        } else if (c_ssubdiff->parsed()) {
            PolyFunc f = func_from_json(parse_json_file(in_a));
            emit.emit(to_json(singular_subdifferential(f, parse_point(point_str)).to_genset()));
        } else if (c_coder->parsed()) {
            PolyMap f = map_from_json(parse_json_file(in_a));
            Vec xy = parse_point(point_str);
            require(xy.size() == static_cast<std::size_t>(f.nx + f.ny), "DimensionMismatch",
                    "coderivative: --point must concatenate x and y");
            Vec x(xy.begin(), xy.begin() + f.nx);
            Vec y(xy.begin() + f.nx, xy.end());
            emit.emit(to_json(coderivative(f, x, y, parse_point(vstar_str))));
        } else if (c_summap->parsed()) {
            emit.emit(to_json(sum_mapping(map_from_json(parse_json_file(in_a)),
                                          map_from_json(parse_json_file(in_b)))));
        } else if (c_compose->parsed()) {
            emit.emit(to_json(compose(map_from_json(parse_json_file(in_a)),
                                      map_from_json(parse_json_file(in_b)))));
        } else if (c_preimage->parsed()) {
            emit.emit(to_json(preimage(map_from_json(parse_json_file(in_a)),
                                       hpoly_from_json(parse_json_file(in_b)))));
        } else if (c_sublevel->parsed()) {
            PolyFunc f = func_from_json(parse_json_file(in_a));
            emit.emit(to_json(
                sublevel_normal_cone(f, parse_rat(gamma_str), parse_point(point_str)).to_genset()));
        } else if (c_mu->parsed()) {
            emit.emit(to_json(mu_function(ovf_from_json(parse_json_file(in_a)))));
        } else if (c_sols->parsed()) {
            OvfInstance inst = ovf_from_json(parse_json_file(in_a));
            emit.emit(to_json(solution_set(inst, parse_point(point_str))));
        } else if (c_ovfsub->parsed()) {
            OvfInstance inst = ovf_from_json(parse_json_file(in_a));
            emit.emit(to_json(subdifferential(mu_function(inst), parse_point(point_str))));
        } else if (c_sep->parsed()) {
            emit.emit(to_json(separate(hpoly_from_json(parse_json_file(in_a)),
                                       hpoly_from_json(parse_json_file(in_b)))));
        } else if (c_topcs->parsed()) {
            emit.emit(to_json(gpcs_to_pcs(hpoly_from_json(parse_json_file(in_a)))));
        } else if (c_verify->parsed()) {
            VerifyConfig cfg;
            cfg.seed = seed;
            cfg.instances = instances;
            cfg.max_dim = max_dim;
            cfg.coeff_bound = coeff_bound;
            cfg.rules = rules;
            cfg.sabotage = sabotage;
            std::ostringstream report;
            cfg.stream = &report;
            VerifySummary summary = run_verify(cfg);
            report << summary_json(summary).dump() << "\n";
            if (out_path.empty())
                std::cout << report.str();
            else
                write_text(out_path, report.str());
            if (!summary.ok()) {
                std::string repro_path = out_path.empty() ? "polycalc-reproducer.jsonl"
                                                          : out_path + ".reproducer.jsonl";
                std::string text;
                for (const auto& f : summary.failures) text += f.dump() + "\n";
                write_text(repro_path, text);
                std::cerr << summary.failed << " of " << summary.total
                          << " checks failed; reproducer written to " << repro_path << "\n";
                return 1;
            }
        }
    } catch (const polycalc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const polycalc::Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    return 0;
}

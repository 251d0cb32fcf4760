#include "polycalc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "polycalc/double_description.hpp"
#include "polycalc/mappings.hpp"
#include "polycalc/normal_cone.hpp"
#include "polycalc/optimal_value.hpp"
#include "polycalc/separation.hpp"

namespace polycalc {
namespace {

Vec cat(const Vec& a, const Vec& b) {
    Vec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Vec head(const Vec& v, std::size_t k) {
    return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
}

Vec tail(const Vec& v, std::size_t k) {
    return Vec(v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
}

Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.rat(bound, 2);
    return m;
}

Json mat_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(to_json(m.row(i)));
    return rows;
}

// Up to `want` distinct points of the nonempty polyhedron s, starting from
// `base` (which must lie in s).  For a singleton the result is just `base`;
// whenever dim(s) >= 1 at least three points come back, built from the
// relative interior, generators, midpoints and ray translates.
std::vector<Vec> sample_points(const HPoly& s, const Vec& base, std::size_t want) {
    std::vector<Vec> out;
    auto push = [&](const Vec& v) {
        if (out.size() >= want) return;
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    push(base);
    GenSet g = dd_convert(s);
    if (g.points.size() == 1 && g.rays.empty() && g.lines.empty()) return out;
    Vec z0 = relative_interior_point(s);
    Rat half = Rat(1) / Rat(2);
    push(z0);
    push(scale(half, add(z0, base)));
    for (const auto& r : g.rays) {
        push(add(z0, r));
        push(add(base, r));
        push(add(z0, scale(Rat(2), r)));
    }
    for (const auto& l : g.lines) {
        push(add(z0, l));
        push(sub(z0, l));
        push(add(base, l));
    }
    for (const auto& p : g.points) {
        push(p);
        push(scale(half, add(z0, p)));
        push(scale(half, add(base, p)));
    }
    return out;
}

// Dimension bands derived from the configured cap: full for plain polyhedra,
// reduced for function domains, halved for the blocks of joint graphs.
int full_dim(Rng& rng, const VerifyConfig& cfg) {
    return static_cast<int>(rng.range(1, std::max(1, cfg.max_dim)));
}

int func_dim(Rng& rng, const VerifyConfig& cfg) {
    return static_cast<int>(rng.range(1, std::max(1, cfg.max_dim - 1)));
}

int block_dim(Rng& rng, const VerifyConfig& cfg) {
    return static_cast<int>(rng.range(1, std::max(1, cfg.max_dim / 2)));
}

RuleRun run_normal_cone(Rng& rng, const VerifyConfig& cfg) {
    int dim = full_dim(rng, cfg);
    GenOptions opt;
    opt.bound = cfg.coeff_bound;
    opt.allow_rays = rng.chance(2, 3);
    opt.allow_lines = rng.chance(1, 3);
    HPoly p = random_polyhedron(rng, dim, opt);
    Vec xbar = pick_point(rng, p);
    RuleRun run;
    run.report = make_report("normal-cone", rep_of(normal_cone(p, xbar)),
                             rep_of(normal_cone_oracle(p, xbar)));
    run.instance = Json{{"rule", "normal-cone"}, {"p", to_json(p)}, {"xbar", to_json(xbar)}};
    return run;
}

RuleRun run_intersection(Rng& rng, const VerifyConfig& cfg) {
    int dim = func_dim(rng, cfg);
    Vec c = rng.vec(static_cast<std::size_t>(dim), cfg.coeff_bound, 2);
    GenOptions opt;
    opt.bound = cfg.coeff_bound;
    opt.anchor = &c;
    opt.allow_lines = rng.chance(1, 3);
    HPoly p = random_polyhedron(rng, dim, opt);
    HPoly q = random_polyhedron(rng, dim, opt);
    Vec xbar = pick_point(rng, intersect(p, q));
    RuleRun run;
    run.report = check_intersection_rule(p, q, xbar);
    run.instance = Json{{"rule", "intersection"},
                        {"p", to_json(p)},
                        {"q", to_json(q)},
                        {"xbar", to_json(xbar)}};
    return run;
}

RuleRun run_sum(Rng& rng, const VerifyConfig& cfg, int index) {
    int nx = block_dim(rng, cfg);
    int ny = block_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    GenOptions opt;
    opt.bound = cb;
    PolyMap f1 = random_graph_mapping(rng, nx, ny, opt);
    Vec base = pick_point(rng, f1.graph);
    Vec xbar = head(base, static_cast<std::size_t>(nx));
    Vec y1 = tail(base, static_cast<std::size_t>(nx));
    bool indicator = (index % 4 == 3);
    PolyMap f2;
    if (indicator) {
        GenOptions topt;
        topt.bound = cb;
        topt.anchor = &xbar;
        f2 = indicator_mapping(random_polyhedron(rng, nx, topt), ny);
    } else {
        Vec anchor = cat(xbar, rng.vec(static_cast<std::size_t>(ny), cb, 2));
        GenOptions gopt;
        gopt.bound = cb;
        gopt.anchor = &anchor;
        f2 = random_graph_mapping(rng, nx, ny, gopt);
    }
    Vec y2 = pick_point(rng, evaluate(f2, xbar));
    Vec ybar = add(y1, y2);
    Vec vstar = rng.vec(static_cast<std::size_t>(ny), cb, 2);

    // Decomposition independence: when the split set has dimension >= 1,
    // the same equality must hold at three distinct splits.
    HPoly splits_set = decomposition_set(f1, f2, xbar, ybar);
    std::vector<Vec> splits = sample_points(splits_set, cat(y1, y2), 3);
    Json splits_json = Json::array();
    RuleRun run;
    for (std::size_t i = 0; i < splits.size(); ++i) {
        Vec s1 = head(splits[i], static_cast<std::size_t>(ny));
        Vec s2 = tail(splits[i], static_cast<std::size_t>(ny));
        splits_json.push_back(Json{{"y1", to_json(s1)}, {"y2", to_json(s2)}});
        RuleReport rep = check_sum_rule(f1, f2, xbar, ybar, s1, s2, vstar);
        if (i == 0 || !rep.equal) run.report = rep;
        if (!run.report.equal) break;
    }
    run.instance = Json{{"rule", "sum"},
                        {"f1", to_json(f1)},
                        {"f2", to_json(f2)},
                        {"xbar", to_json(xbar)},
                        {"ybar", to_json(ybar)},
                        {"vstar", to_json(vstar)},
                        {"splits", splits_json},
                        {"indicator", indicator}};
    return run;
}

RuleRun run_chain(Rng& rng, const VerifyConfig& cfg) {
    int na = block_dim(rng, cfg);
    int nb = block_dim(rng, cfg);
    int nc = block_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    GenOptions opt;
    opt.bound = cb;
    PolyMap f = random_graph_mapping(rng, na, nb, opt);
    Vec basef = pick_point(rng, f.graph);
    Vec xbar = head(basef, static_cast<std::size_t>(na));
    Vec y0 = tail(basef, static_cast<std::size_t>(na));
    Vec anchor_g = cat(y0, rng.vec(static_cast<std::size_t>(nc), cb, 2));
    GenOptions og;
    og.bound = cb;
    og.anchor = &anchor_g;
    PolyMap g = random_graph_mapping(rng, nb, nc, og);
    Vec zbar = pick_point(rng, evaluate(g, y0));
    Vec wstar = rng.vec(static_cast<std::size_t>(nc), cb, 2);

    HPoly mid = intersect(evaluate(f, xbar),
                          substitute_block(g.graph, static_cast<std::size_t>(nb), zbar));
    std::vector<Vec> ybars = sample_points(mid, y0, 3);
    Json ybars_json = Json::array();
    RuleRun run;
    for (std::size_t i = 0; i < ybars.size(); ++i) {
        ybars_json.push_back(to_json(ybars[i]));
        RuleReport rep = check_chain_rule(g, f, xbar, zbar, ybars[i], wstar);
        if (i == 0 || !rep.equal) run.report = rep;
        if (!run.report.equal) break;
    }
    run.instance = Json{{"rule", "chain"},
                        {"f", to_json(f)},
                        {"g", to_json(g)},
                        {"xbar", to_json(xbar)},
                        {"zbar", to_json(zbar)},
                        {"ybars", ybars_json},
                        {"wstar", to_json(wstar)}};
    return run;
}

RuleRun run_preimage(Rng& rng, const VerifyConfig& cfg) {
    int nx = block_dim(rng, cfg);
    int ny = block_dim(rng, cfg);
    GenOptions opt;
    opt.bound = cfg.coeff_bound;
    PolyMap f = random_graph_mapping(rng, nx, ny, opt);
    Vec base = pick_point(rng, f.graph);
    Vec xbar = head(base, static_cast<std::size_t>(nx));
    Vec ybar = tail(base, static_cast<std::size_t>(nx));
    GenOptions topt;
    topt.bound = cfg.coeff_bound;
    topt.anchor = &ybar;
    HPoly theta = random_polyhedron(rng, ny, topt);
    RuleRun run;
    run.report = check_preimage_rule(f, theta, xbar, ybar);
    run.instance = Json{{"rule", "preimage"},
                        {"f", to_json(f)},
                        {"theta", to_json(theta)},
                        {"xbar", to_json(xbar)},
                        {"ybar", to_json(ybar)}};
    return run;
}

RuleRun run_subdiff_sum(Rng& rng, const VerifyConfig& cfg) {
    int nx = func_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    Vec c = rng.vec(static_cast<std::size_t>(nx), cb, 2);
    PolyFunc f1 = random_function(rng, nx, rng.chance(1, 2), &c, false, cb);
    PolyFunc f2 = random_function(rng, nx, rng.chance(1, 2), &c, false, cb);
    Vec xbar = pick_point(rng, intersect(domain(f1), domain(f2)));
    RuleRun run;
    run.report = check_subdiff_sum_rule(f1, f2, xbar);
    run.instance = Json{{"rule", "subdifferential-sum"},
                        {"f1", to_json(f1)},
                        {"f2", to_json(f2)},
                        {"xbar", to_json(xbar)}};
    return run;
}

RuleRun run_affine_chain(Rng& rng, const VerifyConfig& cfg) {
    long cb = cfg.coeff_bound;
    std::size_t n = static_cast<std::size_t>(block_dim(rng, cfg));
    std::size_t m = static_cast<std::size_t>(block_dim(rng, cfg));
    Mat a = random_mat(rng, m, n, std::max(1L, cb - 2));
    Vec b = rng.vec(m, cb, 2);
    Vec xbar = rng.vec(n, cb, 2);
    Vec ybar = add(mat_vec(a, xbar), b);
    PolyFunc f = random_function(rng, static_cast<int>(m), rng.chance(1, 2), &ybar, false, cb);
    RuleRun run;
    run.report = check_affine_chain(f, a, b, xbar);
    run.instance = Json{{"rule", "affine-chain"},
                        {"f", to_json(f)},
                        {"a", mat_json(a)},
                        {"b", to_json(b)},
                        {"xbar", to_json(xbar)}};
    return run;
}

RuleRun run_sublevel(Rng& rng, const VerifyConfig& cfg) {
    int nx = func_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    Vec c = rng.vec(static_cast<std::size_t>(nx), cb, 2);
    PolyFunc f = random_function(rng, nx, rng.chance(1, 2), &c, false, cb);
    Vec xbar = pick_point(rng, domain(f));
    Rat gamma = evaluate_finite(f, xbar);
    RuleRun run;
    run.report = check_sublevel(f, gamma, xbar);
    run.instance = Json{{"rule", "sublevel"},
                        {"f", to_json(f)},
                        {"gamma", to_json(gamma)},
                        {"xbar", to_json(xbar)}};
    return run;
}

RuleRun run_multi_sublevel(Rng& rng, const VerifyConfig& cfg, int index) {
    int nx = block_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    long m = rng.range(2, 3);
    Vec c = rng.vec(static_cast<std::size_t>(nx), cb, 2);
    bool force_restrict = (index % 4 == 0);
    std::vector<PolyFunc> fs;
    bool restricted = false;
    for (long i = 0; i < m; ++i) {
        bool r = (force_restrict && i == 0) || rng.chance(1, 3);
        restricted = restricted || r;
        fs.push_back(random_function(rng, nx, r, &c, false, cb));
    }
    HPoly doms = domain(fs[0]);
    bool continuous = true;
    for (std::size_t i = 1; i < fs.size(); ++i) doms = intersect(doms, domain(fs[i]));
    for (const auto& f : fs) {
        HPoly d = domain(f);
        continuous = continuous && d.ineqs.empty() && d.eqs.empty();
    }
    Vec xbar = pick_point(rng, doms);
    std::vector<Rat> gammas;
    Json gamma_json = Json::array();
    for (const auto& f : fs) {
        Rat g = evaluate_finite(f, xbar);
        if (rng.chance(1, 2)) g += Rat(rng.range(1, 2));
        gammas.push_back(g);
        gamma_json.push_back(to_json(g));
    }
    Json fs_json = Json::array();
    for (const auto& f : fs) fs_json.push_back(to_json(f));
    RuleRun run;
    run.report = check_multi_sublevel(fs, gammas, xbar);
    run.instance = Json{{"rule", "multi-sublevel"},
                        {"fs", fs_json},
                        {"gammas", gamma_json},
                        {"xbar", to_json(xbar)},
                        {"restricted", restricted},
                        {"continuous", continuous}};
    return run;
}

RuleRun run_monotone(Rng& rng, const VerifyConfig& cfg, int index) {
    bool negative = (index % 11 == 10);
    int nx = block_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    Vec c = rng.vec(static_cast<std::size_t>(nx), cb, 2);
    PolyFunc f = random_function(rng, nx, rng.chance(1, 3), &c, false, cb);
    Vec xbar = pick_point(rng, domain(f));
    Rat t0 = evaluate_finite(f, xbar);
    PolyFunc phi = random_univariate(rng, !negative, t0);
    RuleRun run;
    run.instance = Json{{"rule", "monotone-compose"},
                        {"phi", to_json(phi)},
                        {"f", to_json(f)},
                        {"xbar", to_json(xbar)},
                        {"negative", negative}};
    if (negative) {
        run.report.rule = "monotone-compose";
        run.report.lhs.dim = nx;
        run.report.rhs.dim = nx;
        try {
            check_monotone_compose(phi, f, xbar);
            run.report.equal = false;
            run.report.note = "expected NotMonotone, no error raised";
        } catch (const Error& e) {
            if (std::string(e.name()) == "NotMonotone") {
                run.report.equal = true;
                run.report.note = "rejected: NotMonotone";
            } else {
                run.report.equal = false;
                run.report.note = std::string("expected NotMonotone, raised ") + e.name();
            }
        }
        return run;
    }
    run.report = check_monotone_compose(phi, f, xbar);
    return run;
}

RuleRun run_ovf(Rng& rng, const VerifyConfig& cfg) {
    int nx = block_dim(rng, cfg);
    int ny = block_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    GenOptions opt;
    opt.bound = cb;
    PolyMap f = random_graph_mapping(rng, nx, ny, opt);
    Vec base = pick_point(rng, f.graph);
    PolyFunc phi =
        random_function(rng, nx + ny, rng.chance(1, 2), &base, /*bounded_below=*/true, cb);
    OvfInstance inst{phi, f};
    inst.validate();
    Vec xbar = head(base, static_cast<std::size_t>(nx));
    HPoly sols = solution_set(inst, xbar);
    std::vector<Vec> ybars = sample_points(sols, pick_point(rng, sols), 3);
    Json ybars_json = Json::array();
    RuleRun run;
    for (std::size_t i = 0; i < ybars.size(); ++i) {
        ybars_json.push_back(to_json(ybars[i]));
        RuleReport rep = check_ovf_rule(inst, xbar, ybars[i]);
        if (i == 0 || !rep.equal) run.report = rep;
        if (!run.report.equal) break;
    }
    run.instance = Json{{"rule", "ovf"},
                        {"ovf", to_json(inst)},
                        {"xbar", to_json(xbar)},
                        {"ybars", ybars_json}};
    return run;
}

RuleRun run_separation(Rng& rng, const VerifyConfig& cfg, int index) {
    int dim = func_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    int flavor = index % 3;
    HPoly p, omega;
    GenOptions opt;
    opt.bound = cb;
    if (flavor == 0) {
        p = random_polyhedron(rng, dim, opt);
        omega = random_polyhedron(rng, dim, opt);
    } else if (flavor == 1) { // far-apart bounded sets: always separable
        opt.allow_rays = false;
        opt.allow_lines = false;
        GenSet gp = random_genset(rng, dim, opt);
        GenSet go = random_genset(rng, dim, opt);
        for (auto& q : go.points)
            for (auto& t : q) t += Rat(100);
        p = dd_reverse(gp);
        omega = dd_reverse(go);
    } else { // guaranteed contact: identical sets, or a shared anchor point
        Vec c = rng.vec(static_cast<std::size_t>(dim), cb, 2);
        opt.anchor = &c;
        p = random_polyhedron(rng, dim, opt);
        omega = rng.chance(1, 2) ? p : random_polyhedron(rng, dim, opt);
    }
    SepResult res = separate(p, omega);
    bool ok = separation_certificate_ok(p, omega, res);
    RuleRun run;
    run.report.rule = "separation";
    run.report.equal = ok;
    run.report.lhs = dd_convert(p);
    run.report.rhs = dd_convert(omega);
    run.report.note = res.verdict == SepVerdict::Separable ? "separable" : "not separable";
    if (!ok) run.report.note += "; certificate rejected";
    run.instance = Json{{"rule", "separation"},
                        {"p", to_json(p)},
                        {"omega", to_json(omega)},
                        {"result", to_json(res)}};
    return run;
}

RuleRun run_dd_roundtrip(Rng& rng, const VerifyConfig& cfg) {
    int dim = full_dim(rng, cfg);
    long cb = cfg.coeff_bound;
    HPoly p;
    if (rng.chance(1, 2)) {
        GenOptions opt;
        opt.bound = cb;
        opt.allow_lines = rng.chance(1, 2);
        p = random_polyhedron(rng, dim, opt);
    } else { // raw rows: may be empty, unbounded or the whole space
        p.dim = dim;
        long ni = rng.range(0, 4);
        for (long i = 0; i < ni; ++i)
            p.ineqs.push_back({rng.vec(static_cast<std::size_t>(dim), cb, 2), rng.rat(cb, 2)});
        if (rng.chance(1, 3))
            p.eqs.push_back({rng.vec(static_cast<std::size_t>(dim), cb, 2), rng.rat(cb, 2)});
    }
    HPoly back = dd_reverse(dd_convert(p));
    RuleRun run;
    run.report = make_report("dd-roundtrip", rep_of(p), rep_of(back));
    run.instance = Json{{"rule", "dd-roundtrip"}, {"p", to_json(p)}};
    return run;
}

RuleRun run_fm(Rng& rng, const VerifyConfig& cfg) {
    int dim = static_cast<int>(rng.range(2, std::max(2, cfg.max_dim)));
    GenOptions opt;
    opt.bound = cfg.coeff_bound;
    opt.allow_lines = rng.chance(1, 2);
    GenSet gens;
    HPoly p = random_polyhedron(rng, dim, opt, &gens);
    long k = rng.range(1, dim - 1);
    std::vector<std::size_t> idx(static_cast<std::size_t>(dim));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (long i = 0; i < k; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(dim - i)));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
    }
    std::vector<std::size_t> drop(idx.begin(), idx.begin() + k);
    std::sort(drop.begin(), drop.end());
    auto keep = [&](const Vec& v) {
        Vec r;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!std::binary_search(drop.begin(), drop.end(), j)) r.push_back(v[j]);
        return r;
    };
    GenSet proj;
    proj.dim = dim - static_cast<int>(k);
    for (const auto& q : gens.points) proj.points.push_back(keep(q));
    for (const auto& r : gens.rays) {
        Vec v = keep(r);
        if (!is_zero(v)) proj.rays.push_back(v);
    }
    for (const auto& l : gens.lines) {
        Vec v = keep(l);
        if (!is_zero(v)) proj.lines.push_back(v);
    }
    Json drop_json = Json::array();
    for (auto d : drop) drop_json.push_back(d);
    RuleRun run;
    run.report = make_report("fm-vs-dd", rep_of(fm_eliminate(p, drop)), rep_of(proj));
    run.instance = Json{{"rule", "fm-vs-dd"},
                        {"p", to_json(p)},
                        {"generators", to_json(gens)},
                        {"drop", drop_json}};
    return run;
}

// Corrupt the reported lhs and re-judge: flipping nonempty and empty always
// breaks a previously passing comparison, so an honest checker must flag it.
void sabotage_run(RuleRun& run) {
    GenSet lhs = run.report.lhs;
    if (lhs.is_empty_set()) {
        lhs.points.push_back(zero_vec(static_cast<std::size_t>(lhs.dim)));
    } else {
        lhs.points.clear();
        lhs.rays.clear();
        lhs.lines.clear();
    }
    RuleReport fresh = make_report(run.report.rule, rep_of(lhs), rep_of(run.report.rhs),
                                   "sabotage: lhs corrupted");
    fresh.instance_digest = run.report.instance_digest;
    run.report = fresh;
}

} // namespace

const std::vector<std::string>& verify_rules() {
    static const std::vector<std::string> rules = {
        "intersection", "sum",        "chain",         "preimage",
        "sublevel",     "multi-sublevel", "affine-chain", "monotone-compose",
        "ovf",          "separation", "dd-roundtrip",  "fm-vs-dd"};
    return rules;
}

bool is_verify_rule(const std::string& name) {
    const auto& r = verify_rules();
    return std::find(r.begin(), r.end(), name) != r.end();
}

RuleRun run_rule_instance(const std::string& rule, const VerifyConfig& cfg, int index) {
    Rng rng(instance_seed(cfg.seed, rule, index));
    RuleRun run;
    if (rule == "normal-cone")
        run = run_normal_cone(rng, cfg);
    else if (rule == "intersection")
        run = run_intersection(rng, cfg);
    else if (rule == "sum")
        run = run_sum(rng, cfg, index);
    else if (rule == "chain")
        run = run_chain(rng, cfg);
    else if (rule == "preimage")
        run = run_preimage(rng, cfg);
    else if (rule == "subdifferential-sum")
        run = run_subdiff_sum(rng, cfg);
    else if (rule == "affine-chain")
        run = run_affine_chain(rng, cfg);
    else if (rule == "sublevel")
        run = run_sublevel(rng, cfg);
    else if (rule == "multi-sublevel")
        run = run_multi_sublevel(rng, cfg, index);
    else if (rule == "monotone-compose")
        run = run_monotone(rng, cfg, index);
    else if (rule == "ovf")
        run = run_ovf(rng, cfg);
    else if (rule == "separation")
        run = run_separation(rng, cfg, index);
    else if (rule == "dd-roundtrip")
        run = run_dd_roundtrip(rng, cfg);
    else if (rule == "fm-vs-dd")
        run = run_fm(rng, cfg);
    else
        throw std::invalid_argument("unknown rule: " + rule);
    run.report.instance_digest = digest_of(run.instance);
    return run;
}

VerifySummary run_verify(const VerifyConfig& cfg) {
    std::vector<std::string> rules = cfg.rules.empty() ? verify_rules() : cfg.rules;
    for (const auto& r : rules)
        if (!is_verify_rule(r)) throw std::invalid_argument("unknown rule: " + r);
    VerifySummary s;
    s.seed = cfg.seed;
    s.instances = cfg.instances;
    s.sabotage = cfg.sabotage;
    for (const auto& rule : rules) {
        RuleStats st;
        st.rule = rule;
        for (int i = 0; i < cfg.instances; ++i) {
            RuleRun run = run_rule_instance(rule, cfg, i);
            if (cfg.sabotage) sabotage_run(run);
            bool bad = !run.report.equal;
            ++st.total;
            Json line = to_json(run.report);
            if (bad) {
                ++st.failed;
                line["instance"] = run.instance;
                s.failures.push_back(line);
            }
            if (cfg.stream) *cfg.stream << line.dump() << "\n";
        }
        s.rules.push_back(st);
        s.total += st.total;
        s.failed += st.failed;
    }
    return s;
}

Json summary_json(const VerifySummary& s) {
    Json rules = Json::array();
    for (const auto& st : s.rules)
        rules.push_back(Json{{"rule", st.rule}, {"total", st.total}, {"failed", st.failed}});
    return Json{{"seed", s.seed},
                {"instances", s.instances},
                {"mode", s.sabotage ? "sabotage" : "verify"},
                {"rules", rules},
                {"total", s.total},
                {"failed", s.failed},
                {"ok", s.ok()}};
}

} // namespace polycalc

#include "polycalc/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "polycalc/errors.hpp"

namespace polycalc {

Json to_json(const Rat& x) { return rat_str(x); }

Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

namespace {

Json rows_to_json(const std::vector<LinCon>& rows) {
    Json a = Json::array();
    for (const auto& c : rows) {
        Json r;
        r["a"] = to_json(c.a);
        r["b"] = to_json(c.b);
        a.push_back(std::move(r));
    }
    return a;
}

Json vecs_to_json(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<LinCon> rows_from_json(const Json& j, const char* key) {
    const Json& arr = field(j, key);
    if (!arr.is_array())
        throw ParseError(std::string("field '") + key + "' must be an array");
    std::vector<LinCon> rows;
    for (const auto& r : arr)
        rows.push_back(LinCon{vec_from_json(field(r, "a")), rat_from_json(field(r, "b"))});
    return rows;
}

std::vector<Vec> vecs_from_json(const Json& j, const char* key) {
    const Json& arr = field(j, key);
    if (!arr.is_array())
        throw ParseError(std::string("field '") + key + "' must be an array");
    std::vector<Vec> vs;
    for (const auto& v : arr) vs.push_back(vec_from_json(v));
    return vs;
}

} // namespace

Json to_json(const HPoly& p) {
    Json j;
    j["dim"] = p.dim;
    j["ineqs"] = rows_to_json(p.ineqs);
    j["eqs"] = rows_to_json(p.eqs);
    return j;
}

Json to_json(const GenSet& g) {
    Json j;
    j["dim"] = g.dim;
    j["points"] = vecs_to_json(g.points);
    j["rays"] = vecs_to_json(g.rays);
    j["lines"] = vecs_to_json(g.lines);
    return j;
}

Json to_json(const PolyCone& c) {
    Json j;
    j["dim"] = c.dim;
    j["rays"] = vecs_to_json(c.rays);
    j["lines"] = vecs_to_json(c.lines);
    return j;
}

Json to_json(const PolyMap& f) {
    Json j;
    j["nx"] = f.nx;
    j["ny"] = f.ny;
    j["graph"] = to_json(f.graph);
    return j;
}

Json to_json(const PolyFunc& f) {
    Json j;
    j["nx"] = f.nx;
    j["epi"] = to_json(f.epi);
    return j;
}

Json to_json(const OvfInstance& inst) {
    Json j;
    j["phi"] = to_json(inst.phi);
    j["F"] = to_json(inst.f);
    return j;
}

Json to_json(const RuleReport& rep) {
    Json j;
    j["rule"] = rep.rule;
    j["equal"] = rep.equal;
    j["lhs"] = to_json(rep.lhs);
    j["rhs"] = to_json(rep.rhs);
    if (rep.counterexample) {
        Json cex;
        cex["kind"] = rep.cex_kind;
        cex["gen"] = to_json(*rep.counterexample);
        j["counterexample"] = std::move(cex);
    } else {
        j["counterexample"] = nullptr;
    }
    if (!rep.instance_digest.empty()) j["digest"] = rep.instance_digest;
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

Json to_json(const SepResult& res) {
    Json j;
    j["verdict"] = res.verdict == SepVerdict::Separable ? "separable" : "not_separable";
    if (res.verdict == SepVerdict::Separable) {
        j["x_star"] = to_json(res.x_star);
        j["alpha"] = to_json(res.alpha);
        j["witness"] = res.witness ? to_json(*res.witness) : Json(nullptr);
        j["common_point"] = nullptr;
    } else {
        j["x_star"] = nullptr;
        j["alpha"] = nullptr;
        j["witness"] = nullptr;
        j["common_point"] = res.common_point ? to_json(*res.common_point) : Json(nullptr);
    }
    return j;
}

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational values must be strings like \"3/4\"");
    return parse_rat(j.get<std::string>());
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vectors must be arrays of rational strings");
    Vec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

HPoly hpoly_from_json(const Json& j) {
    HPoly p;
    p.dim = int_field(j, "dim");
    if (j.contains("ineqs")) p.ineqs = rows_from_json(j, "ineqs");
    if (j.contains("eqs")) p.eqs = rows_from_json(j, "eqs");
    p.validate();
    return p;
}

GenSet genset_from_json(const Json& j) {
    GenSet g;
    g.dim = int_field(j, "dim");
    if (j.contains("points")) g.points = vecs_from_json(j, "points");
    if (j.contains("rays")) g.rays = vecs_from_json(j, "rays");
    if (j.contains("lines")) g.lines = vecs_from_json(j, "lines");
    g.validate();
    return g;
}

PolyCone cone_from_json(const Json& j) {
    PolyCone c;
    c.dim = int_field(j, "dim");
    if (j.contains("rays")) c.rays = vecs_from_json(j, "rays");
    if (j.contains("lines")) c.lines = vecs_from_json(j, "lines");
    c.to_genset().validate();
    return c;
}

PolyMap map_from_json(const Json& j) {
    PolyMap f;
    f.nx = int_field(j, "nx");
    f.ny = int_field(j, "ny");
    f.graph = hpoly_from_json(field(j, "graph"));
    f.validate();
    return f;
}

PolyFunc func_from_json(const Json& j) {
    if (j.contains("epi"))
        return PolyFunc::from_epigraph(int_field(j, "nx"), hpoly_from_json(field(j, "epi")));
    if (j.contains("pieces")) {
        std::vector<LinCon> pieces = rows_from_json(j, "pieces");
        HPoly dom;
        if (j.contains("dom")) {
            dom = hpoly_from_json(field(j, "dom"));
        } else {
            if (pieces.empty())
                throw ParseError("function needs pieces or an explicit domain");
            dom = HPoly::whole_space(static_cast<int>(pieces.front().a.size()));
        }
        return PolyFunc::max_affine(dom.dim, pieces, dom);
    }
    throw ParseError("function needs either an 'epi' or a 'pieces' field");
}

OvfInstance ovf_from_json(const Json& j) {
    OvfInstance inst{func_from_json(field(j, "phi")), map_from_json(field(j, "F"))};
    inst.validate();
    return inst;
}

Json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_of(const Json& j) {
    std::uint64_t h = fnv1a(j.dump());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace polycalc

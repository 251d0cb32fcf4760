#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "polycalc/optimal_value.hpp"
#include "polycalc/separation.hpp"

namespace polycalc {

// Ordered JSON keeps field order stable, which the verification harness
// relies on for byte-identical reports.
using Json = nlohmann::ordered_json;

Json to_json(const Rat& x);
Json to_json(const Vec& v);
Json to_json(const HPoly& p);
Json to_json(const GenSet& g);
Json to_json(const PolyCone& c);
Json to_json(const PolyMap& f);
Json to_json(const PolyFunc& f);
Json to_json(const OvfInstance& inst);
Json to_json(const RuleReport& rep);
Json to_json(const SepResult& res);

Rat rat_from_json(const Json& j);
Vec vec_from_json(const Json& j);
HPoly hpoly_from_json(const Json& j);
GenSet genset_from_json(const Json& j);
PolyCone cone_from_json(const Json& j);
PolyMap map_from_json(const Json& j);
PolyFunc func_from_json(const Json& j); // accepts {nx, epi} or {pieces, dom}
OvfInstance ovf_from_json(const Json& j);

// Wraps nlohmann's parser, rethrowing as ParseError with location info.
Json parse_json_text(const std::string& text, const std::string& origin);
Json parse_json_file(const std::string& path);

// FNV-1a over the compact serialization; stable across runs and platforms.
std::uint64_t fnv1a(const std::string& bytes);
std::string digest_of(const Json& j);

} // namespace polycalc

#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "cdp/enumerate.hpp"

namespace cdp {

using nlohmann::json;

// Integers serialize as JSON numbers only within 53-bit safety, strings
// beyond; rationals always as "p/q" strings.
json int_to_json(const Int& x);
Int int_from_json(const json& j);
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const json& j);

json cdp_to_json(const CDP& c);
CDP cdp_from_json(const json& j);

json certificate_to_json(const FanoCertificate& c);
FanoCertificate certificate_from_json(const json& j);

json move_to_json(const Move& m);
Move move_from_json(const json& j);

json classification_to_json(const ClassificationResult& r);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace cdp

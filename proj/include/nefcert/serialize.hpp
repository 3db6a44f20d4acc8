#pragma once

#include <string>

#include "nefcert/certify.hpp"
#include "nefcert/divisor_class.hpp"
#include "nefcert/standard_construction.hpp"
#include "nefcert/weighting.hpp"

#include <json.hpp>

namespace nefcert {

using Json = nlohmann::json;

// {"n": int, "psi": ["p/q", ...], "boundary": [{"block": [...], "coeff": "p/q"}]}
Json divisor_class_to_json(const DivisorClass& a);
DivisorClass divisor_class_from_json(const Json& j);

// {"n": int, "edges": [{"edge": [i, j], "value": "p/q"}]}  with i < j
Json weighting_to_json(const Weighting& w);
Weighting weighting_from_json(const Json& j);

// {"n": int, "nodes": [[ints], ...]}  listing canonical blocks
Json stable_tree_to_json(const StableTree& t);
StableTree stable_tree_from_json(const Json& j);

// {"version": 1, "n", "m", "degrees", "family", "sigma"?, "weights",
//  "coefficients", "options", "claims"}
Json certificate_to_json(const EffectivityCertificate& cert);
EffectivityCertificate certificate_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace nefcert

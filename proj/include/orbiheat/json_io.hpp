#pragma once

#include "orbiheat/classifier.hpp"
#include "orbiheat/flat_spectrum.hpp"
#include "orbiheat/heat_invariants.hpp"
#include "orbiheat/rational.hpp"
#include "orbiheat/signature.hpp"

#include <json.hpp>

namespace orbiheat::json {

using Json = nlohmann::json;

/// {"num": "p", "den": "q"}
Json to_json(const Rational& r);
/// Throws std::invalid_argument on missing fields or non-integer strings.
Rational rational_from_json(const Json& j);

/// {"handles": h, "crosscaps": k, "cone_points": [...], "mirror_boundaries": [[...], ...]}
Json to_json(const OrbifoldSignature& sig);
OrbifoldSignature signature_from_json(const Json& j);

/// {"deg_-1": x, "deg_-0.5": x, "deg_0": {"num","den"}, "deg_0.5": x, "deg_1": x}
Json to_json(const HeatExpansion& e);
HeatExpansion expansion_from_json(const Json& j);

/// {"-1": {"fitted","predicted","abs_err","rel_err"}, ...}; a NaN rel_err is null.
Json to_json(const flat::VerifyReport& report);

/// [{"sig_a": "...", "sig_b": "...", "c": {"num","den"}}, ...]
Json to_json(const std::vector<classify::Collision>& collisions);

}  // namespace orbiheat::json

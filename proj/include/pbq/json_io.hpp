#pragma once

// JSON interchange for every public type. Rationals travel as strings
// ("p/q", or "p" when the denominator is 1) so values survive round trips
// exactly. Emission order is canonical, so equal values serialize equally.

#include <string>

#include <nlohmann/json.hpp>

#include "pbq/core.hpp"
#include "pbq/lift.hpp"
#include "pbq/quadratize.hpp"
#include "pbq/representation.hpp"
#include "pbq/verify.hpp"

namespace pbq::io {

using json = nlohmann::json;

json spec_to_json(const SymmetricSpec& spec);
SymmetricSpec spec_from_json(const json& j);

json poly_to_json(const MultilinearPoly& poly);
MultilinearPoly poly_from_json(const json& j);

json quadform_to_json(const QuadForm& g);
QuadForm quadform_from_json(const json& j);

json rep_to_json(const NegPartRep& rep);
NegPartRep rep_from_json(const json& j);

json result_to_json(const QuadratizationResult& result);
QuadratizationResult result_from_json(const json& j);

json report_to_json(const VerifyReport& report);
VerifyReport report_from_json(const json& j);

json lift_to_json(const LiftSpec& lift);
LiftSpec lift_from_json(const json& j);

// Plain-text rendering of a form, canonical term order.
std::string quadform_to_string(const QuadForm& g);

}  // namespace pbq::io

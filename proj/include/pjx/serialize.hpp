#pragma once

#include <json.hpp>

#include "pjx/poly.hpp"
#include "pjx/rational.hpp"

namespace pjx {

// Rationals serialise as "p/q" (q omitted when 1); polynomials as arrays of
// such strings in ascending degree.
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);
void to_json(nlohmann::json& j, const RatPoly& p);
void from_json(const nlohmann::json& j, RatPoly& p);

}  // namespace pjx

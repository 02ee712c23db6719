#include "pjx/serialize.hpp"

#include "pjx/errors.hpp"

namespace pjx {

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) {
  if (!j.is_string()) fail(ErrorCode::ParseError, "rational must be a JSON string");
  r = Rational::parse(j.get<std::string>());
}

void to_json(nlohmann::json& j, const RatPoly& p) {
  j = nlohmann::json::array();
  for (const auto& c : p.coefficients()) j.push_back(c.str());
}

void from_json(const nlohmann::json& j, RatPoly& p) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "polynomial must be a JSON array");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(e.get<Rational>());
  p = RatPoly(std::move(c));
}

}  // namespace pjx

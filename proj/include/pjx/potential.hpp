#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "pjx/poly.hpp"
#include "pjx/ratfunc.hpp"
#include "pjx/tdpt.hpp"

namespace pjx {

/// V(z) = 2(a^2 - 1/4)/(1 - z) + 2(b^2 - 1/4)/(1 + z) - (a + b + 1)^2 + constant
///        - 8(1 - z^2) (log W)'' + 8z (log W)'
/// with (a, b) = base and W = log_term; the z derivatives are the x-space
/// -2 d^2/dx^2 log W rewritten with z = cos 2x.
struct PotentialExpr {
  TDPTParams base;
  Rational constant;
  RatPoly log_term{Rational(1)};

  /// Exact value; PoleAtZ at z = +-1 or where log_term vanishes.
  Rational operator()(const Rational& z) const;
  double eval(double z) const;
  /// Batched floating evaluation through the SIMD Horner kernel.
  std::vector<double> eval(std::span<const double> zs) const;

  /// Single fraction with denominator (1 - z^2) * log_term^2.
  RatFunc as_rational_function() const;
};

/// The plain TDPT potential as a PotentialExpr (no constant, W = 1).
PotentialExpr potential_z(const TDPTParams& p);

/// -8(1 - z^2) f'' + 8z f' for f = log W, as one fraction over W^2.
RatFunc log_derivative_term(const RatPoly& w);

void to_json(nlohmann::json& j, const PotentialExpr& v);

}  // namespace pjx

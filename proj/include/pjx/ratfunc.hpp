#pragma once

#include "pjx/poly.hpp"

namespace pjx {

/// Rational function num/den over Q. Not reduced; equality is decided by
/// cross-multiplication so no gcd is ever needed.
struct RatFunc {
  RatPoly num;
  RatPoly den{Rational(1)};

  RatFunc() = default;
  RatFunc(RatPoly n, RatPoly d);
  explicit RatFunc(RatPoly n) : num(std::move(n)) {}

  Rational operator()(const Rational& z) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num * b.den == b.num * a.den; }
};

}  // namespace pjx

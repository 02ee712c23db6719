#include "pjx/ratfunc.hpp"

#include "pjx/errors.hpp"

namespace pjx {

RatFunc::RatFunc(RatPoly n, RatPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) fail(ErrorCode::ZeroPolynomial, "rational function with zero denominator");
}

Rational RatFunc::operator()(const Rational& z) const {
  const Rational d = den(z);
  if (d.is_zero()) fail(ErrorCode::PoleAtZ, "rational function has a pole at z = " + z.str());
  return num(z) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den == b.den) return {a.num - b.num, a.den};
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return {a.num * b.num, a.den * b.den}; }

}  // namespace pjx

#include "pjx/potential.hpp"

#include "pjx/errors.hpp"
#include "pjx/serialize.hpp"
#include "pjx/simd/kernels.hpp"

namespace pjx {

namespace {

Rational wall_coefficient(int a) { return Rational(2) * (Rational(a) * Rational(a) - Rational(1, 4)); }

Rational base_constant(const TDPTParams& p) {
  const Rational s(p.alpha + p.beta + 1);
  return -(s * s);
}

}  // namespace

Rational PotentialExpr::operator()(const Rational& z) const {
  const Rational one(1);
  if (z == one || z == -one) fail(ErrorCode::PoleAtZ, "potential is singular at z = " + z.str());
  const Rational w = log_term(z);
  if (w.is_zero()) fail(ErrorCode::PoleAtZ, "log term vanishes at z = " + z.str());
  const Rational w1 = derivative(log_term, 1)(z);
  const Rational w2 = derivative(log_term, 2)(z);
  const Rational f1 = w1 / w;
  const Rational f2 = w2 / w - f1 * f1;
  return wall_coefficient(base.alpha) / (one - z) + wall_coefficient(base.beta) / (one + z) + base_constant(base) +
         constant - Rational(8) * (one - z * z) * f2 + Rational(8) * z * f1;
}

double PotentialExpr::eval(double z) const {
  const double zs[1] = {z};
  return eval(std::span<const double>(zs, 1)).front();
}

std::vector<double> PotentialExpr::eval(std::span<const double> zs) const {
  const std::size_t n = zs.size();
  const std::vector<double> c0 = log_term.to_doubles();
  const std::vector<double> c1 = derivative(log_term, 1).to_doubles();
  const std::vector<double> c2 = derivative(log_term, 2).to_doubles();
  std::vector<double> w(n), w1(n), w2(n);
  simd::horner(c0, zs, w);
  simd::horner(c1, zs, w1);
  simd::horner(c2, zs, w2);

  const double ca = wall_coefficient(base.alpha).to_double();
  const double cb = wall_coefficient(base.beta).to_double();
  const double k = (base_constant(base) + constant).to_double();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = zs[i];
    const double f1 = w1[i] / w[i];
    const double f2 = w2[i] / w[i] - f1 * f1;
    out[i] = ca / (1.0 - z) + cb / (1.0 + z) + k - 8.0 * (1.0 - z * z) * f2 + 8.0 * z * f1;
  }
  return out;
}

RatFunc PotentialExpr::as_rational_function() const {
  const RatPoly one_minus{Rational(1), Rational(-1)};
  const RatPoly one_plus{Rational(1), Rational(1)};
  const RatFunc walls(RatPoly(wall_coefficient(base.alpha)) * one_plus + RatPoly(wall_coefficient(base.beta)) * one_minus,
                      one_minus * one_plus);
  const RatFunc k(RatPoly(base_constant(base) + constant));
  return walls + k + log_derivative_term(log_term);
}

PotentialExpr potential_z(const TDPTParams& p) { return {p, Rational(0), RatPoly(Rational(1))}; }

RatFunc log_derivative_term(const RatPoly& w) {
  const RatPoly w1 = derivative(w, 1);
  const RatPoly w2 = derivative(w, 2);
  const RatPoly z = RatPoly::z();
  const RatPoly one_minus_z2{Rational(1), Rational(0), Rational(-1)};
  RatPoly num = Rational(-8) * one_minus_z2 * (w2 * w - w1 * w1) + Rational(8) * z * w1 * w;
  return {std::move(num), w * w};
}

void to_json(nlohmann::json& j, const PotentialExpr& v) {
  j = nlohmann::json{{"base", {{"alpha", v.base.alpha}, {"beta", v.base.beta}}},
                     {"constant", v.constant},
                     {"log_term", v.log_term}};
}

}  // namespace pjx

#include <string>

#include "pjx/errors.hpp"
#include "pjx/serialize.hpp"
#include "pjx/verify.hpp"

namespace pjx {

namespace {

RatPoly wall_poly(const Rational& c0, const Rational& c1) { return RatPoly{c0, c1}; }

}  // namespace

ResidualReport schrodinger_residual(const GaugeFactor& gauge, const RatPoly& p, const PotentialExpr& v,
                                    const Rational& e) {
  const Rational& s1 = gauge.s1;
  const Rational& s2 = gauge.s2;
  const RatPoly z = RatPoly::z();
  const RatPoly one_minus = wall_poly(1, -1);
  const RatPoly one_plus = wall_poly(1, 1);
  const RatPoly q = one_minus * one_plus;

  // g'/g = H / (1 - z^2), g''/g = G2 / (1 - z^2)^2
  const RatPoly h = one_plus * (-s1) + one_minus * s2;
  const RatPoly g2 = one_plus * one_plus * (-s1) - one_minus * one_minus * s2 + h * h;

  const RatPoly& w = v.log_term;
  const RatPoly w1 = derivative(w, 1);
  const RatPoly w2 = derivative(w, 2);
  const RatPoly p1 = derivative(p, 1);
  const RatPoly p2 = derivative(p, 2);

  const Rational a = Rational(v.base.alpha);
  const Rational b = Rational(v.base.beta);
  const Rational quarter(1, 4);
  const Rational c1 = Rational(2) * (a * a - quarter);
  const Rational c2 = Rational(2) * (b * b - quarter);
  const Rational s = a + b + Rational(1);
  const Rational c0 = -(s * s) + v.constant - e;

  const RatPoly t1 = Rational(-4) * pow(q, 2) * (p2 * w * w - Rational(2) * p1 * w1 * w - p * w2 * w + Rational(2) * p * w1 * w1);
  const RatPoly t2 = (Rational(-8) * h + Rational(4) * z) * q * (p1 * w - p * w1) * w;
  const RatPoly t3 = (Rational(-4) * g2 + Rational(4) * z * h + one_plus * c1 + one_minus * c2 + q * c0) * p * w * w;
  const RatPoly t4 = q * p * (Rational(-8) * q * (w2 * w - w1 * w1) + Rational(8) * z * w1 * w);
  const RatPoly total = t1 + t2 + t3 + t4;

  auto [quot, rem] = divmod(total, q);
  if (!rem.is_zero()) {
    fail(ErrorCode::GaugeMismatch, "gauge (" + s1.str() + ", " + s2.str() + ") does not match the wall terms");
  }
  ResidualReport r;
  r.is_zero = quot.is_zero();
  r.residual = std::move(quot);
  return r;
}

ResidualReport schrodinger_residual(const GaugeFactor& gauge, const RatPoly& p, const TDPTParams& v,
                                    const Rational& e) {
  return schrodinger_residual(gauge, p, potential_z(v), e);
}

ResidualReport chain_eigen_residual(const ChainSpec& spec, int k) {
  const int m = spec.m();
  const Eigenfunction f = eigenfunction(spec, k);
  const PotentialExpr v{{spec.N - m, spec.M - m}, energy(-m, spec.N, spec.M), f.denominator};
  return schrodinger_residual(f.gauge, f.numerator, v, f.energy);
}

bool nodeless(const ChainSpec& spec) {
  return sturm_root_count(r_matrix(spec).det(), Rational(-1), Rational(1)) == 0;
}

void to_json(nlohmann::json& j, const ResidualReport& r) {
  j = nlohmann::json{{"is_zero", r.is_zero}, {"residual", r.residual}};
}

}  // namespace pjx

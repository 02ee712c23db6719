#include "pjx/tdpt.hpp"

#include "pjx/potential.hpp"
#include "pjx/ratfunc.hpp"

namespace pjx {

Rational energy(int k, int alpha, int beta) {
  return Rational(4) * Rational(k) * Rational(alpha + beta + 1 + k);
}

EnergyLevel energy_level(int k, const TDPTParams& p) { return {k, energy(k, p.alpha, p.beta)}; }

GaugeFactor ground_state_gauge(const TDPTParams& p) {
  const Rational half(1, 2);
  return {(Rational(p.alpha) + half) * half, (Rational(p.beta) + half) * half};
}

GaugeFactor para_jacobi_gauge(int N, int M) { return ground_state_gauge({-N, -M}); }

bool shape_invariance_check(int N, int M, std::optional<Rational> constant) {
  const GaugeFactor g = para_jacobi_gauge(N, M);
  const RatPoly one_minus{Rational(1), Rational(-1)};
  const RatPoly one_plus{Rational(1), Rational(1)};
  const RatPoly z = RatPoly::z();

  // f = s1 log(1 - z) + s2 log(1 + z)
  const RatFunc fz = RatFunc(RatPoly(-g.s1), one_minus) + RatFunc(RatPoly(g.s2), one_plus);
  const RatFunc fzz = RatFunc(RatPoly(-g.s1), one_minus * one_minus) + RatFunc(RatPoly(-g.s2), one_plus * one_plus);
  const RatFunc d2 = RatFunc(Rational(-8) * one_minus * one_plus) * fzz + RatFunc(Rational(8) * z) * fz;

  const RatFunc lhs = potential_z({N, M}).as_rational_function() + d2;
  const Rational c = constant.value_or(energy(-1, N, M));
  const RatFunc rhs = potential_z({N - 1, M - 1}).as_rational_function() + RatFunc(RatPoly(c));
  return lhs == rhs;
}

}  // namespace pjx

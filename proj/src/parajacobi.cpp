#include "pjx/parajacobi.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pjx/errors.hpp"

namespace pjx {

namespace {

std::string window_text(int N, int M, int n) {
  return "(N,M,n) = (" + std::to_string(N) + "," + std::to_string(M) + "," + std::to_string(n) +
         ") outside max(N,M) <= n < N+M";
}

std::vector<RatPoly> powers_of_one_plus_z(int up_to) {
  std::vector<RatPoly> out{RatPoly(Rational(1))};
  const RatPoly one_plus_z{Rational(1), Rational(1)};
  for (int k = 1; k <= up_to; ++k) out.push_back(out.back() * one_plus_z);
  return out;
}

Rational fact(long n) { return Rational(factorial(n)); }

RatPoly theta_base(int N, int M, int n) {
  const auto powers = powers_of_one_plus_z(n);
  RatPoly theta;
  for (int k = M; k <= n; ++k) {
    const Rational c = Rational(parity_sign(k)) * fact(n - M - N + k) /
                       (pow(Rational(2), k) * fact(k) * fact(k - M) * fact(n - k));
    theta += powers[static_cast<std::size_t>(k)] * c;
  }
  const Rational prefactor = pow(Rational(-2), n) * fact(n - M) * fact(n) / fact(2 * n - M - N);
  return theta * prefactor;
}

RatPoly theta_tail(int N, int M, int n) {
  const int top = N + M - n - 1;
  const auto powers = powers_of_one_plus_z(std::max(top, 0));
  RatPoly theta;
  for (int k = 0; k <= top; ++k) {
    const Rational c = Rational(parity_sign(k)) * fact(M - 1 - k) /
                       (pow(Rational(2), k) * fact(k) * fact(top - k) * fact(n - k));
    theta += powers[static_cast<std::size_t>(k)] * c;
  }
  const Rational prefactor = pow(Rational(-2), n) * fact(2 * n - M - N + 1) * fact(M + N - n - 1) / fact(n - N);
  return theta * prefactor;
}

}  // namespace

bool in_window(int N, int M, int n) { return N >= 1 && M >= 1 && std::max(N, M) <= n && n < N + M; }

void check_window(int N, int M, int n) {
  if (!in_window(N, M, n)) fail(ErrorCode::WindowViolation, window_text(N, M, n));
}

ParaJacobiParts para_jacobi_parts(int N, int M, int n) {
  check_window(N, M, n);
  return {theta_base(N, M, n), theta_tail(N, M, n)};
}

RatPoly para_jacobi(const PJParams& p) { return para_jacobi_parts(p.N, p.M, p.n).at(p.lambda); }

RatPoly para_jacobi_base(int N, int M, int n) {
  if (N < 1 || M < 1 || n < std::max(N, M)) fail(ErrorCode::WindowViolation, window_text(N, M, n));
  return theta_base(N, M, n);
}

RatPoly jacobi_poly(int k, int alpha, int beta) {
  if (k < 0) fail(ErrorCode::BadIndex, "Jacobi degree must be nonnegative");
  const RatPoly one_minus_z{Rational(1), Rational(-1)};
  const RatPoly one_plus_z{Rational(1), Rational(1)};
  RatPoly sum;
  for (int j = 0; j <= k; ++j) {
    const Rational c = Rational(parity_sign(k - j)) * binomial(Rational(k + alpha), j) * binomial(Rational(k + beta), k - j);
    if (c.is_zero()) continue;
    sum += pow(one_minus_z, k - j) * pow(one_plus_z, j) * c;
  }
  return sum * (Rational(1) / pow(Rational(2), k));
}

Rational coeff_a(int N, int M, int n) {
  if (n < 1) fail(ErrorCode::BadIndex, "a_n requires n >= 1");
  return Rational(M + N - n - 1) / Rational(n);
}

Rational coeff_b(int N, int M, int n) {
  return pow(Rational(2), n) * fact(2 * n - N - M + 1) * fact(M - 1) / (fact(n) * fact(n - N));
}

Rational coeff_lambda_star(int N, int M, int n) {
  const Rational num = fact(n) * fact(n - M) * fact(n - N);
  const Rational den = fact(2 * n - N - M) * fact(2 * n - N - M + 1) * fact(N + M - n - 1);
  return num / den;
}

Rational affine_g(int N, int M, int n, const Rational& lambda) {
  return Rational(parity_sign(n - M)) * (Rational(parity_sign(n - N + 1)) * lambda + coeff_lambda_star(N, M, n));
}

BoundaryValues boundary_values(const PJParams& p) {
  check_window(p.N, p.M, p.n);
  return {Rational(parity_sign(p.n)) * p.lambda * coeff_b(p.N, p.M, p.n),
          coeff_b(p.M, p.N, p.n) * affine_g(p.N, p.M, p.n, p.lambda)};
}

}  // namespace pjx

#pragma once

#include "pjx/poly.hpp"
#include "pjx/rational.hpp"

namespace pjx {

/// Parameters of p_n^{(-N,-M)}(z; lambda). Valid when max(N, M) <= n < N + M.
struct PJParams {
  int N = 1;
  int M = 1;
  int n = 1;
  Rational lambda;
};

/// Exponents of a gauge factor (1 - z)^s1 (1 + z)^s2.
struct GaugeFactor {
  Rational s1;
  Rational s2;
  friend bool operator==(const GaugeFactor&, const GaugeFactor&) = default;
};

bool in_window(int N, int M, int n);
/// Throws WindowViolation unless N, M >= 1 and max(N, M) <= n < N + M.
void check_window(int N, int M, int n);

/// p = base + lambda * tail; both parts are independent of lambda.
struct ParaJacobiParts {
  RatPoly base;
  RatPoly tail;
  RatPoly at(const Rational& lambda) const { return base + tail * lambda; }
};

/// The two Theta-sum components of the para-Jacobi polynomial, with their
/// factorial prefactors applied.
ParaJacobiParts para_jacobi_parts(int N, int M, int n);

/// Monic degree-n para-Jacobi polynomial; WindowViolation outside the window.
RatPoly para_jacobi(const PJParams& p);

/// Lambda-free part alone. It stays well defined for n = N + M - 1 + j with
/// N, M >= 1 and n >= max(N, M) (no factorial goes negative), which is where
/// derivatives of in-window polynomials land when the lambda coefficient
/// vanishes.
RatPoly para_jacobi_base(int N, int M, int n);

/// Classical Jacobi polynomial P_k^{(alpha, beta)}(z) from the explicit
/// (1 - z)^{k-j}(1 + z)^j sum with generalised binomials.
RatPoly jacobi_poly(int k, int alpha, int beta);

/// a_n^{(N,M)} = (M + N - n - 1) / n.
Rational coeff_a(int N, int M, int n);

/// b_n^{(N,M)} = 2^n (2n - N - M + 1)! (M - 1)! / (n! (n - N)!).
/// NegativeFactorial when any factorial argument is negative.
Rational coeff_b(int N, int M, int n);

/// lambda_n^{(N,M)} = n!(n-M)!(n-N)! / ((2n-N-M)!(2n-N-M+1)!(N+M-n-1)!).
Rational coeff_lambda_star(int N, int M, int n);

/// g_n^{(N,M)}(lambda) = (-1)^{n-M} ((-1)^{n-N+1} lambda + lambda_n^{(N,M)}).
Rational affine_g(int N, int M, int n, const Rational& lambda);

struct BoundaryValues {
  Rational at_minus_one;
  Rational at_plus_one;
};

/// Closed-form values of p at z = -1 and z = +1:
///   p(-1) = (-1)^n lambda b_n^{(N,M)}
///   p(+1) = b_n^{(M,N)} g_n^{(N,M)}(lambda)
/// (the +1 value takes b with N and M exchanged, as follows from the
/// reflection symmetry).
BoundaryValues boundary_values(const PJParams& p);

}  // namespace pjx

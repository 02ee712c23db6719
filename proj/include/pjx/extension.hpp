#pragma once

#include <vector>

#include <json.hpp>

#include "pjx/chains.hpp"
#include "pjx/determinant.hpp"
#include "pjx/parajacobi.hpp"
#include "pjx/poly.hpp"
#include "pjx/potential.hpp"
#include "pjx/tdpt.hpp"

namespace pjx {

/// A_j^{(k)} = prod_{i<k} a_{n_j - i}^{(N - i, M - i)} = (N + M - n_j - 1)_k / (n_j)_k.
Rational coeff_A(int N, int M, int nj, int k);

/// (n)_k p_{n-k}^{(-N+k,-M+k)}(z; A^{(k)} lambda), the k-th derivative of the
/// seed written with shifted parameters. Past the window the lambda part has a
/// zero coefficient and only the base polynomial remains. When N - k or M - k
/// drops below 1 the shifted form is not available and the derivative is
/// returned instead.
RatPoly shifted_seed(int N, int M, int n, int k, const Rational& lambda);

/// The seed polynomials p_{n_i}^{(-N,-M)}(z; lambda_i) of a chain.
std::vector<RatPoly> seeds(const ChainSpec& spec);

struct RMatrix {
  ChainSpec spec;
  /// entries[i][j] = d^i/dz^i of seed j.
  Grid<RatPoly> entries;

  RatPoly det() const;
};

/// R matrix with `rows` rows (default m): row i holds the i-th derivatives of
/// the seeds. Rows past the first are obtained by exact differentiation.
RMatrix r_matrix(const ChainSpec& spec, int rows = -1);

/// det of the m x m matrix with rows (n_j)_k (M + N - n_j - 1)_k, k = 0..m-1.
Rational d_determinant(int N, int M, const std::vector<int>& ns);

/// Closed form of det R at z = side (side = +1 or -1).
///   side -1: lambda_1...lambda_m (-1)^{sum n + m(m-1)/2} prod b_{n_j}^{(N,M)} D
///            / (2^{m(m-1)/2} prod_k (M - k)^{m-k})
///   side +1: (-1)^{sum n - mM} prod((-1)^{n_j-N+1} lambda_j + lambda*_j)
///            prod b_{n_j}^{(M,N)} D / (2^{m(m-1)/2} prod_k (N - k)^{m-k})
/// DegenerateDenominator when M < m (side -1) or N < m (side +1).
Rational boundary_det_closed_form(const ChainSpec& spec, int side);

/// The +1 form with b^{(N,M)} and (M - k) factors in place of b^{(M,N)} and
/// (N - k). It agrees with det R(1) only when N = M; kept for comparison.
Rational boundary_det_symmetric_form(const ChainSpec& spec, int side);

/// Two-step boundary values written through E_{-n1-1} - E_{-n2-1}.
/// WrongArity unless m = 2.
Rational two_step_boundary(const ChainSpec& spec, int side);

/// V_{N-m,M-m} + E_{-m}(N, M) with log term det R. IrregularChain when
/// validate_chain rejects the chain.
PotentialExpr extended_potential(const ChainSpec& spec);

/// Q_k. For k >= 0 the bordered determinant whose last column holds
/// (-2)^i (k+i)_i (1 - z^2)^{m-i} P_{k+i}^{(N-i,M-i)}, i = 0..m; for
/// k = -n_i - 1 the minor of R without its last row and i-th column.
/// BadIndex for any other negative k.
RatPoly eop(const ChainSpec& spec, int k);

struct TUV {
  RatPoly T;
  RatPoly U;
  RatPoly V;
};

/// Two-step T, U, V from products of shifted seeds. WrongArity unless m = 2.
TUV two_step_tuv(const ChainSpec& spec);

/// Q_k for m = 2 and k >= 0 assembled from T, U, V:
///   4(k+1)(k+2) T P_{k+2}^{(N-2,M-2)} + 2(k+1) U (1-z^2) P_{k+1}^{(N-1,M-1)}
///   + V (1-z^2)^2 P_k^{(N,M)}.
RatPoly two_step_eop(const ChainSpec& spec, int k);

/// (1 - z)^{N-m} (1 + z)^{M-m} / (det R(z))^2. PoleAtZ where det R vanishes.
Rational measure_weight(const ChainSpec& spec, const Rational& z);

struct Eigenfunction {
  GaugeFactor gauge;
  RatPoly numerator;
  RatPoly denominator;
  Rational energy;
};

/// psi_k = (1 - z)^{s1} (1 + z)^{s2} Q_k / det R with the gauge of
/// psi_0(N - m, M - m), at energy E_k(N, M).
Eigenfunction eigenfunction(const ChainSpec& spec, int k);

struct EOPMember {
  int k = 0;
  int degree = 0;
  Rational energy;
};

struct EOPFamily {
  ChainSpec spec;
  int weight_exponent_minus = 0;  // exponent of (1 - z)
  int weight_exponent_plus = 0;   // exponent of (1 + z)
  RatPoly weight_denominator;     // det R, squared in the weight
  std::vector<EOPMember> members;
  int codimension = 0;
};

/// Indices -n_i - 1 and 0..kmax with their degrees. Codimension counts the
/// degrees below deg Q_0 that no member attains.
EOPFamily eop_family(const ChainSpec& spec, int kmax);

/// The `count` lowest energies of the extended Hamiltonian: E_{-n_i-1}(N, M)
/// and E_k(N, M), k >= 0, ascending.
std::vector<EnergyLevel> expected_spectrum(const ChainSpec& spec, int count);

void to_json(nlohmann::json& j, const EOPFamily& f);

}  // namespace pjx

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pjx/chains.hpp"
#include "pjx/extension.hpp"
#include "pjx/potential.hpp"

namespace pjx {

struct ResidualReport {
  RatPoly residual;
  bool is_zero = false;
};

/// Substitutes psi = (1 - z)^{s1} (1 + z)^{s2} p / W into -psi_xx + (V - E) psi,
/// W being the potential's log term, and multiplies through by
/// (1 - z^2) W^3 / ((1 - z)^{s1} (1 + z)^{s2}). The result is always a
/// polynomial; it is divisible by 1 - z^2 exactly when the gauge matches the
/// wall behaviour of V, and GaugeMismatch is raised otherwise. The reported
/// residual is that quotient.
ResidualReport schrodinger_residual(const GaugeFactor& gauge, const RatPoly& p, const PotentialExpr& v,
                                    const Rational& e);
ResidualReport schrodinger_residual(const GaugeFactor& gauge, const RatPoly& p, const TDPTParams& v,
                                    const Rational& e);

/// Residual of eigenfunction(spec, k) against the chain's potential.
ResidualReport chain_eigen_residual(const ChainSpec& spec, int k);

/// det R has no root in (-1, 1). EndpointRoot when det R(+-1) = 0.
bool nodeless(const ChainSpec& spec);

struct SpectrumReport {
  std::vector<double> computed;
  std::vector<Rational> expected;
  /// Per level: relative error, or absolute error where the expected value is 0.
  std::vector<double> errors;
  double max_rel_error = 0.0;
  double max_abs_error_at_zero = 0.0;
  int grid_size = 0;

  std::string csv() const;
};

/// Lowest `levels` Dirichlet eigenvalues of -d^2/dx^2 + V on (0, pi/2), central
/// differences on `grid_size` interior points of a uniform x grid. Errors are
/// filled in against `expected` when given. SolverFailure if LAPACK reports one.
SpectrumReport fd_spectrum(const PotentialExpr& v, int grid_size, int levels,
                           const std::vector<Rational>& expected = {});

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order on [-1, 1], nodes ascending.
QuadratureRule gauss_legendre(int order);

struct GramReport {
  std::vector<int> ks;
  std::vector<std::vector<double>> gram;
  double max_normalized_off_diagonal = 0.0;
  bool diagonal_positive = false;
  int order = 0;
};

/// G[a][b] = int_{-1}^{1} Q_a Q_b (1 - z)^{N-m} (1 + z)^{M-m} / (det R)^2 dz.
/// NonRegularChain unless validate_chain accepts the chain.
GramReport gram_matrix(const ChainSpec& spec, const std::vector<int>& ks, int order);

/// gram_matrix, doubling the order from `order` while the normalized
/// off-diagonals are at or above `tolerance`, up to 2048.
GramReport gram_matrix_converged(const ChainSpec& spec, const std::vector<int>& ks, int order = 256,
                                 double tolerance = 1e-8);

void to_json(nlohmann::json& j, const ResidualReport& r);
void to_json(nlohmann::json& j, const SpectrumReport& r);
void to_json(nlohmann::json& j, const GramReport& r);

}  // namespace pjx

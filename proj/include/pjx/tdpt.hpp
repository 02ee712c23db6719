#pragma once

#include <optional>

#include "pjx/parajacobi.hpp"
#include "pjx/rational.hpp"

namespace pjx {

struct TDPTParams {
  int alpha = 1;
  int beta = 1;
  friend bool operator==(const TDPTParams&, const TDPTParams&) = default;
};

struct EnergyLevel {
  int k = 0;
  Rational value;
};

/// E_k(alpha, beta) = (alpha + beta + 2k + 1)^2 - (alpha + beta + 1)^2
///                 = 4k(alpha + beta + 1 + k). Negative k gives the formal
/// energies of the seed functions.
Rational energy(int k, int alpha, int beta);
EnergyLevel energy_level(int k, const TDPTParams& p);

/// Exponents of psi_0 = (1 - z)^{(alpha+1/2)/2} (1 + z)^{(beta+1/2)/2}.
GaugeFactor ground_state_gauge(const TDPTParams& p);

/// Gauge of the formal eigenfunction psi_{-1} at parameters (-N, -M).
GaugeFactor para_jacobi_gauge(int N, int M);

/// Checks V(z; N, M) - 2 (log psi_{-1})'' == V(z; N-1, M-1) + c as rational
/// functions of z, derivatives taken in x through the z chain rule. c defaults
/// to E_{-1}(N, M); a different value can be passed as a negative control.
bool shape_invariance_check(int N, int M, std::optional<Rational> constant = std::nullopt);

}  // namespace pjx

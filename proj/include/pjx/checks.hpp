#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pjx/chains.hpp"

namespace pjx::checks {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Chains of the boundary sweep: N, M in 1..5, m in 1..3 with M >= m, every
/// decreasing n-tuple in the window, and three lambda samples per step (the
/// first admissible ones from the step table, then one outside it).
std::vector<ChainSpec> boundary_sweep();

/// Up to `count` rationals inside the admissible set, spread over its
/// components, followed by one rational outside it when `with_outside`.
std::vector<Rational> lambda_samples(const IntervalSet& s, int count, bool with_outside);

/// A rational strictly outside `s` (and away from its endpoints), if any exists.
std::optional<Rational> outside_sample(const IntervalSet& s);

CheckResult worked_example_polynomials();
CheckResult worked_example_wronskian();
CheckResult identity_suite();
CheckResult boundary_closed_forms();
CheckResult two_step_boundary_forms();
CheckResult regularity_soundness();
CheckResult two_step_tables();
CheckResult residual_bound_states();
CheckResult residual_para_jacobi();
CheckResult residual_chain_eigenfunctions();
CheckResult worked_example_spectrum();
CheckResult worked_example_orthogonality();
CheckResult shape_invariance();

/// Every check above, in a fixed order.
std::vector<CheckResult> all();

}  // namespace pjx::checks

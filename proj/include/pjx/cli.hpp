#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pjx/potential.hpp"
#include "pjx/rational.hpp"

namespace pjx::cli {

/// Runs one command line (without the program name). Returns the exit status:
/// 0 on success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `samples` equally spaced points from -1 + margin*2 to 1 - margin*2
/// (margin is a fraction of the interval length).
std::vector<Rational> z_grid(int samples, const Rational& margin);

/// "z,V" rows with both columns rendered from exact values.
std::string potential_csv(const PotentialExpr& v, const std::vector<Rational>& zs);

}  // namespace pjx::cli

#include <lapacke.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "pjx/errors.hpp"
#include "pjx/serialize.hpp"
#include "pjx/verify.hpp"

namespace pjx {

SpectrumReport fd_spectrum(const PotentialExpr& v, int grid_size, int levels, const std::vector<Rational>& expected) {
  if (grid_size < 100) fail(ErrorCode::BadIndex, "fd_spectrum needs grid_size >= 100");
  if (levels < 1 || levels > grid_size) fail(ErrorCode::BadIndex, "level count out of range");
  const std::size_t n = static_cast<std::size_t>(grid_size);
  const double h = (std::numbers::pi / 2.0) / static_cast<double>(grid_size + 1);
  const double inv_h2 = 1.0 / (h * h);

  std::vector<double> zs(n);
  for (std::size_t i = 0; i < n; ++i) zs[i] = std::cos(2.0 * h * static_cast<double>(i + 1));
  const std::vector<double> pot = v.eval(zs);

  std::vector<double> d(n), e(n > 0 ? n - 1 : 0, -inv_h2);
  for (std::size_t i = 0; i < n; ++i) d[i] = 2.0 * inv_h2 + pot[i];

  std::vector<double> w(n);
  std::vector<lapack_int> iblock(n), isplit(n);
  lapack_int found = 0;
  lapack_int nsplit = 0;
  const lapack_int info = LAPACKE_dstebz('I', 'E', static_cast<lapack_int>(n), 0.0, 0.0, 1, levels, 0.0, d.data(),
                                         e.data(), &found, &nsplit, w.data(), iblock.data(), isplit.data());
  if (info != 0 || found != levels) {
    fail(ErrorCode::SolverFailure, "dstebz info = " + std::to_string(info) + ", found " + std::to_string(found));
  }

  SpectrumReport r;
  r.grid_size = grid_size;
  r.computed.assign(w.begin(), w.begin() + levels);
  r.expected = expected;
  const std::size_t compared = std::min(r.computed.size(), expected.size());
  for (std::size_t i = 0; i < compared; ++i) {
    const double ex = expected[i].to_double();
    const double diff = std::abs(r.computed[i] - ex);
    if (expected[i].is_zero()) {
      r.errors.push_back(diff);
      r.max_abs_error_at_zero = std::max(r.max_abs_error_at_zero, diff);
    } else {
      const double rel = diff / std::abs(ex);
      r.errors.push_back(rel);
      r.max_rel_error = std::max(r.max_rel_error, rel);
    }
  }
  return r;
}

std::string SpectrumReport::csv() const {
  std::ostringstream os;
  os << "level,expected,computed,rel_error\n";
  char buf[64];
  for (std::size_t i = 0; i < computed.size(); ++i) {
    os << i << ',';
    if (i < expected.size()) os << to_decimal(expected[i]);
    std::snprintf(buf, sizeof buf, "%.17g", computed[i]);
    os << ',' << buf << ',';
    if (i < errors.size()) {
      std::snprintf(buf, sizeof buf, "%.17g", errors[i]);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

void to_json(nlohmann::json& j, const SpectrumReport& r) {
  j = nlohmann::json{{"grid_size", r.grid_size},
                     {"computed", r.computed},
                     {"expected", r.expected},
                     {"errors", r.errors},
                     {"max_rel_error", r.max_rel_error},
                     {"max_abs_error_at_zero", r.max_abs_error_at_zero}};
}

}  // namespace pjx

#include "pjx/simd/kernels.hpp"

namespace pjx::simd::scalar {

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = xs.size();
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs[i];
    double acc = coeffs[top];
    for (std::size_t k = top; k-- > 0;) acc = acc * x + coeffs[k];
    out[i] = acc;
  }
}

double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

}  // namespace pjx::simd::scalar

#include "pjx/simd/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace pjx::simd::neon {

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = xs.size();
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(xs.data() + i);
    float64x2_t acc = vdupq_n_f64(coeffs[top]);
    for (std::size_t k = top; k-- > 0;) acc = vaddq_f64(vmulq_f64(acc, x), vdupq_n_f64(coeffs[k]));
    vst1q_f64(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    const double x = xs[i];
    double acc = coeffs[top];
    for (std::size_t k = top; k-- > 0;) acc = acc * x + coeffs[k];
    out[i] = acc;
  }
}

double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  const std::size_t n = w.size();
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t wa = vmulq_f64(vld1q_f64(w.data() + i), vld1q_f64(a.data() + i));
    acc = vaddq_f64(acc, vmulq_f64(wa, vld1q_f64(b.data() + i)));
  }
  double sum = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

}  // namespace pjx::simd::neon

#endif

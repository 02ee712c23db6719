#include "pjx/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#define PJX_TARGET_AVX2 __attribute__((target("avx2")))

namespace pjx::simd::avx2 {

// Multiply and add stay separate (no FMA) so every lane rounds exactly like the
// scalar reference.
PJX_TARGET_AVX2 void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  const std::size_t n = xs.size();
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs.data() + i);
    __m256d acc = _mm256_set1_pd(coeffs[top]);
    for (std::size_t k = top; k-- > 0;) acc = _mm256_add_pd(_mm256_mul_pd(acc, x), _mm256_set1_pd(coeffs[k]));
    _mm256_storeu_pd(out.data() + i, acc);
  }
  for (; i < n; ++i) {
    const double x = xs[i];
    double acc = coeffs[top];
    for (std::size_t k = top; k-- > 0;) acc = acc * x + coeffs[k];
    out[i] = acc;
  }
}

PJX_TARGET_AVX2 double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  const std::size_t n = w.size();
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d wa = _mm256_mul_pd(_mm256_loadu_pd(w.data() + i), _mm256_loadu_pd(a.data() + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(wa, _mm256_loadu_pd(b.data() + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += w[i] * a[i] * b[i];
  return sum;
}

}  // namespace pjx::simd::avx2

#endif

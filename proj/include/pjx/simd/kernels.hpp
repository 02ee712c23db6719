#pragma once

// Double-precision inner loops used by the numerical oracles. Every kernel has
// a scalar reference; vector variants are picked at runtime from the CPU's
// capabilities and must reproduce the reference (Horner bit-for-bit, the
// reductions up to summation order).

#include <span>
#include <string_view>

namespace pjx::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);
bool isa_supported(Isa isa);
/// Best ISA available on this machine.
Isa detected_isa();
/// ISA currently used by the dispatching entry points. Defaults to
/// detected_isa(), or the value of PJX_SIMD ("scalar", "avx2", "neon") when set
/// and supported.
Isa active_isa();
/// Force an ISA; returns false (and changes nothing) when unsupported.
bool set_active_isa(Isa isa);

/// out[i] = sum_k coeffs[k] * xs[i]^k, ascending coefficients.
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);

/// sum_i w[i] * a[i] * b[i].
double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b);

namespace scalar {
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out);
double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b);
}  // namespace neon
#endif

}  // namespace pjx::simd

#include <atomic>
#include <cstdlib>
#include <string>

#include "pjx/simd/kernels.hpp"

namespace pjx::simd {

namespace {

struct KernelTable {
  Isa isa;
  void (*horner)(std::span<const double>, std::span<const double>, std::span<double>);
  double (*weighted_dot)(std::span<const double>, std::span<const double>, std::span<const double>);
};

constexpr KernelTable kScalar{Isa::Scalar, &scalar::horner, &scalar::weighted_dot};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::horner, &avx2::weighted_dot};
#endif
#if defined(__aarch64__)
constexpr KernelTable kNeon{Isa::Neon, &neon::horner, &neon::weighted_dot};
#endif

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return &kScalar;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return &kAvx2;
#else
      return nullptr;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* initial_table() {
  Isa isa = detected_isa();
  if (const char* env = std::getenv("PJX_SIMD")) {
    const std::string v(env);
    Isa wanted = isa;
    if (v == "scalar") wanted = Isa::Scalar;
    else if (v == "avx2") wanted = Isa::Avx2;
    else if (v == "neon") wanted = Isa::Neon;
    if (isa_supported(wanted)) isa = wanted;
  }
  return table_for(isa);
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_supported(Isa::Avx2)) return Isa::Avx2;
  if (isa_supported(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

Isa active_isa() { return active().load()->isa; }

bool set_active_isa(Isa isa) {
  if (!isa_supported(isa)) return false;
  active().store(table_for(isa));
  return true;
}

void horner(std::span<const double> coeffs, std::span<const double> xs, std::span<double> out) {
  active().load()->horner(coeffs, xs, out);
}

double weighted_dot(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  return active().load()->weighted_dot(w, a, b);
}

}  // namespace pjx::simd

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pjx/simd/kernels.hpp"

using namespace pjx::simd;

namespace {

struct Data {
  std::vector<double> coeffs, xs, w, a, b;
};

Data make_data(std::mt19937& g, std::size_t n, std::size_t degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Data d;
  for (std::size_t i = 0; i <= degree; ++i) d.coeffs.push_back(u(g) * 10.0);
  for (std::size_t i = 0; i < n; ++i) {
    d.xs.push_back(u(g));
    d.w.push_back(std::abs(u(g)));
    d.a.push_back(u(g));
    d.b.push_back(u(g));
  }
  return d;
}

double naive_dot(const Data& d) {
  long double s = 0.0L;
  for (std::size_t i = 0; i < d.w.size(); ++i) s += static_cast<long double>(d.w[i]) * d.a[i] * d.b[i];
  return static_cast<double>(s);
}

}  // namespace

TEST_CASE("scalar horner matches direct evaluation") {
  const std::vector<double> c{1.0, -2.0, 0.5};
  const std::vector<double> xs{0.0, 1.0, 2.0, -3.0};
  std::vector<double> out(xs.size());
  scalar::horner(c, xs, out);
  CHECK(out == std::vector<double>{1.0, -0.5, -1.0, 11.5});
  std::vector<double> none(3);
  scalar::horner(std::vector<double>{}, std::vector<double>{1.0, 2.0, 3.0}, none);
  CHECK(none == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("scalar weighted dot") {
  CHECK(scalar::weighted_dot(std::vector<double>{1, 2, 3}, std::vector<double>{1, 1, 1},
                             std::vector<double>{2, 0, -1}) == 2.0 - 3.0);
}

TEST_CASE("dispatch") {
  CHECK(isa_supported(Isa::Scalar));
  CHECK(isa_supported(detected_isa()));
  const Isa before = active_isa();
  REQUIRE(set_active_isa(Isa::Scalar));
  CHECK(active_isa() == Isa::Scalar);
  if (!isa_supported(Isa::Neon)) CHECK_FALSE(set_active_isa(Isa::Neon));
  CHECK(active_isa() == Isa::Scalar);
  set_active_isa(before);
  CHECK(to_string(Isa::Avx2) == "avx2");
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 reproduces the scalar reference") {
  if (!isa_supported(Isa::Avx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
    return;
  }
  std::mt19937 g(5);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 17u, 256u, 1001u}) {
    for (std::size_t degree : {0u, 1u, 6u, 20u}) {
      const Data d = make_data(g, n, degree);
      std::vector<double> ref(n), vec(n);
      scalar::horner(d.coeffs, d.xs, ref);
      avx2::horner(d.coeffs, d.xs, vec);
      CHECK(ref == vec);
      const double s = scalar::weighted_dot(d.w, d.a, d.b);
      const double v = avx2::weighted_dot(d.w, d.a, d.b);
      const double exact = naive_dot(d);
      CHECK(std::abs(s - v) <= 1e-13 * (1.0 + std::abs(exact)));
      CHECK(std::abs(v - exact) <= 1e-13 * (1.0 + std::abs(exact)));
    }
  }
}
#endif

#if defined(__aarch64__)
TEST_CASE("neon reproduces the scalar reference") {
  std::mt19937 g(5);
  for (std::size_t n : {0u, 1u, 2u, 3u, 17u, 1001u}) {
    const Data d = make_data(g, n, 9);
    std::vector<double> ref(n), vec(n);
    scalar::horner(d.coeffs, d.xs, ref);
    neon::horner(d.coeffs, d.xs, vec);
    CHECK(ref == vec);
    CHECK(std::abs(scalar::weighted_dot(d.w, d.a, d.b) - neon::weighted_dot(d.w, d.a, d.b)) < 1e-12);
  }
}
#endif

TEST_CASE("dispatching entry points follow the active choice") {
  std::mt19937 g(9);
  const Data d = make_data(g, 333, 12);
  std::vector<double> ref(d.xs.size()), out(d.xs.size());
  scalar::horner(d.coeffs, d.xs, ref);
  const Isa before = active_isa();
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (!set_active_isa(isa)) continue;
    horner(d.coeffs, d.xs, out);
    CHECK(out == ref);
    CHECK(std::abs(weighted_dot(d.w, d.a, d.b) - naive_dot(d)) < 1e-12);
  }
  set_active_isa(before);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pjx/checks.hpp"
#include "pjx/errors.hpp"
#include "pjx/extension.hpp"
#include "pjx/parajacobi.hpp"
#include "pjx/verify.hpp"

using namespace pjx;

namespace {

const ChainSpec example{3, 3, {{4, Rational(-1)}, {3, Rational(1)}}};

std::vector<Rational> as_rationals(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("residual of bound and formal states") {
  CHECK(schrodinger_residual(ground_state_gauge({3, 3}), jacobi_poly(2, 3, 3), TDPTParams{3, 3}, energy(2, 3, 3))
            .is_zero);
  for (const Rational& l : {Rational(0), Rational(-1), Rational(11, 3)}) {
    const RatPoly p = para_jacobi({3, 3, 4, l});
    CHECK(schrodinger_residual(para_jacobi_gauge(3, 3), p, TDPTParams{3, 3}, energy(-5, 3, 3)).is_zero);
    CHECK_FALSE(
        schrodinger_residual(para_jacobi_gauge(3, 3), p, TDPTParams{3, 3}, energy(-5, 3, 3) + Rational(1)).is_zero);
  }
  for (int N = 1; N <= 5; ++N)
    for (int M = 1; M <= 5; ++M)
      for (int n = std::max(N, M); n < N + M; ++n)
        CHECK(schrodinger_residual(para_jacobi_gauge(N, M), para_jacobi({N, M, n, Rational(2, 7)}), TDPTParams{N, M},
                                   energy(-n - 1, N, M))
                  .is_zero);
}

TEST_CASE("gauge mismatch is reported") {
  try {
    schrodinger_residual(GaugeFactor{Rational(1, 3), Rational(7, 4)}, jacobi_poly(1, 3, 3), TDPTParams{3, 3},
                         energy(1, 3, 3));
    FAIL("expected GaugeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GaugeMismatch);
  }
}

TEST_CASE("chain eigenfunction residuals") {
  for (int k : {0, 1, 2, 3, -4, -5}) CHECK(chain_eigen_residual(example, k).is_zero);
  const Eigenfunction e = eigenfunction(example, 1);
  CHECK_FALSE(schrodinger_residual(e.gauge, e.numerator, extended_potential(example), e.energy + Rational(1)).is_zero);
  int three_step = 0;
  for (const auto& c : checks::boundary_sweep()) {
    if (c.m() != 3 || !validate_chain(c).regular()) continue;
    ++three_step;
    for (int k : {0, 1, 2}) CHECK(chain_eigen_residual(c, k).is_zero);
    for (const auto& s : c.steps) CHECK(chain_eigen_residual(c, -s.n - 1).is_zero);
  }
  CHECK(three_step > 0);
}

TEST_CASE("nodeless") {
  CHECK(nodeless(example));
  CHECK_FALSE(nodeless({3, 3, {{4, Rational(1)}, {3, Rational(1)}}}));
  CHECK(nodeless({3, 3, {{4, Rational(-1)}}}));
}

TEST_CASE("nodeless matches the tables on the sweep") {
  for (const auto& c : checks::boundary_sweep()) {
    const ChainReport r = validate_chain(c);
    if (r.regular()) CHECK(nodeless(c));
  }
}

TEST_CASE("quadrature") {
  const QuadratureRule r = gauss_legendre(20);
  double sum = 0.0;
  for (double w : r.weights) sum += w;
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
  double x38 = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) x38 += r.weights[i] * std::pow(r.nodes[i], 38);
  CHECK(x38 == doctest::Approx(2.0 / 39.0).epsilon(1e-13));
  for (std::size_t i = 1; i < r.nodes.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
  CHECK(gauss_legendre(1).nodes == std::vector<double>{0.0});
}

TEST_CASE("finite-difference spectrum of the plain potential") {
  const SpectrumReport r = fd_spectrum(potential_z({1, 1}), 4000, 3, as_rationals({0, 16, 40}));
  CHECK(r.max_rel_error < 1e-3);
  CHECK(r.max_abs_error_at_zero < 0.05);
  for (std::size_t i = 1; i < r.computed.size(); ++i) CHECK(r.computed[i] > r.computed[i - 1]);

  for (int a = 1; a <= 3; ++a) {
    std::vector<Rational> want;
    for (int k = 0; k < 4; ++k) want.push_back(energy(k, a, a + 1));
    CHECK(fd_spectrum(potential_z({a, a + 1}), 4000, 4, want).max_rel_error < 1e-3);
  }
}

TEST_CASE("grid doubling shrinks the error about fourfold") {
  const auto want = as_rationals({0, 16, 40, 72});
  const double e1 = fd_spectrum(potential_z({1, 1}), 500, 4, want).errors[3];
  const double e2 = fd_spectrum(potential_z({1, 1}), 1000, 4, want).errors[3];
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("finite-difference spectrum of the extension") {
  const SpectrumReport r =
      fd_spectrum(extended_potential(example), 4000, 6, as_rationals({-48, -40, 0, 32, 72, 120}));
  CHECK(r.max_rel_error < 1e-3);
  CHECK(r.max_abs_error_at_zero < 0.05);
  CHECK(r.csv().rfind("level,expected,computed,rel_error\n", 0) == 0);
}

TEST_CASE("spectrum argument checks") {
  try {
    fd_spectrum(potential_z({1, 1}), 10, 3);
    FAIL("expected BadIndex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadIndex);
  }
}

TEST_CASE("gram matrices") {
  const GramReport seeds = gram_matrix(example, {-5, -4}, 256);
  CHECK(seeds.max_normalized_off_diagonal < 1e-8);
  const GramReport low = gram_matrix(example, {0, 1, 2}, 256);
  CHECK(low.max_normalized_off_diagonal < 1e-8);
  CHECK(low.diagonal_positive);
  CHECK(gram_matrix(example, {3}, 256).diagonal_positive);
  try {
    gram_matrix({3, 3, {{4, Rational(1)}}}, {0, 1}, 256);
    FAIL("expected NonRegularChain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRegularChain);
  }
}

TEST_CASE("gram matrices across small regular chains") {
  int checked = 0;
  for (const auto& c : checks::boundary_sweep()) {
    if (c.m() > 2 || !validate_chain(c).regular()) continue;
    std::vector<int> ks{0, 1, 2, 3, 4};
    for (const auto& s : c.steps) ks.push_back(-s.n - 1);
    const GramReport g = gram_matrix_converged(c, ks);
    CAPTURE(c.N);
    CAPTURE(c.M);
    CHECK(g.max_normalized_off_diagonal < 1e-8);
    CHECK(g.diagonal_positive);
    ++checked;
  }
  CHECK(checked > 0);
}

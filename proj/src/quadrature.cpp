#include <cmath>
#include <numbers>
#include <utility>

#include "pjx/errors.hpp"
#include "pjx/simd/kernels.hpp"
#include "pjx/verify.hpp"

namespace pjx {

namespace {

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
  if (order < 1) fail(ErrorCode::BadIndex, "quadrature order must be >= 1");
  const std::size_t n = static_cast<std::size_t>(order);
  QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double dn = static_cast<double>(order);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi's initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
    for (int iter = 0; iter < 50; ++iter) {
      const auto [pn, pm] = legendre_pair(order, x);
      const double dx = pn / (dn * (x * pn - pm) / (x * x - 1.0));
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const auto [pn, pm] = legendre_pair(order, x);
    const double dp = dn * (x * pn - pm) / (x * x - 1.0);
    const double wgt = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[n - 1 - i] = wgt;
    rule.weights[i] = wgt;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

GramReport gram_matrix(const ChainSpec& spec, const std::vector<int>& ks, int order) {
  if (!validate_chain(spec).regular()) fail(ErrorCode::NonRegularChain, "Gram matrix needs a regular chain");
  const int m = spec.m();
  const QuadratureRule rule = gauss_legendre(order);
  const std::size_t n = rule.nodes.size();

  std::vector<double> det(n);
  simd::horner(r_matrix(spec).det().to_doubles(), rule.nodes, det);
  std::vector<double> weight(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = rule.nodes[i];
    weight[i] = rule.weights[i] * std::pow(1.0 - z, spec.N - m) * std::pow(1.0 + z, spec.M - m) / (det[i] * det[i]);
  }

  std::vector<std::vector<double>> values;
  for (int k : ks) {
    std::vector<double> q(n);
    simd::horner(eop(spec, k).to_doubles(), rule.nodes, q);
    values.push_back(std::move(q));
  }

  GramReport r;
  r.ks = ks;
  r.order = order;
  const std::size_t s = ks.size();
  r.gram.assign(s, std::vector<double>(s));
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a; b < s; ++b) {
      const double g = simd::weighted_dot(weight, values[a], values[b]);
      r.gram[a][b] = g;
      r.gram[b][a] = g;
    }
  }
  r.diagonal_positive = true;
  for (std::size_t a = 0; a < s; ++a) r.diagonal_positive = r.diagonal_positive && r.gram[a][a] > 0.0;
  for (std::size_t a = 0; a < s; ++a) {
    for (std::size_t b = a + 1; b < s; ++b) {
      const double norm = std::sqrt(std::abs(r.gram[a][a] * r.gram[b][b]));
      const double off = std::abs(r.gram[a][b]) / norm;
      r.max_normalized_off_diagonal = std::max(r.max_normalized_off_diagonal, off);
    }
  }
  return r;
}

GramReport gram_matrix_converged(const ChainSpec& spec, const std::vector<int>& ks, int order, double tolerance) {
  GramReport r = gram_matrix(spec, ks, order);
  while (r.max_normalized_off_diagonal >= tolerance && order < 2048) {
    order = std::min(order * 2, 2048);
    r = gram_matrix(spec, ks, order);
  }
  return r;
}

void to_json(nlohmann::json& j, const GramReport& r) {
  j = nlohmann::json{{"k", r.ks},
                     {"order", r.order},
                     {"gram", r.gram},
                     {"max_normalized_off_diagonal", r.max_normalized_off_diagonal},
                     {"diagonal_positive", r.diagonal_positive}};
}

}  // namespace pjx

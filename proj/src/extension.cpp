#include "pjx/extension.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pjx/errors.hpp"
#include "pjx/serialize.hpp"

namespace pjx {

namespace {

const RatPoly& one_minus_z2() {
  static const RatPoly p{Rational(1), Rational(0), Rational(-1)};
  return p;
}

void require_two_step(const ChainSpec& spec) {
  if (spec.m() != 2) fail(ErrorCode::WrongArity, "two-step formula needs m = 2, got m = " + std::to_string(spec.m()));
}

Rational boundary_form(const ChainSpec& spec, int side, bool swapped) {
  if (side != 1 && side != -1) fail(ErrorCode::BadIndex, "side must be +1 or -1");
  const int m = spec.m();
  const int N = spec.N;
  const int M = spec.M;
  for (const auto& s : spec.steps) check_window(N, M, s.n);
  // The factor (X - k) with X = M on side -1, and X = N on side +1 with the swap.
  const int X = (side == 1 && swapped) ? N : M;
  if (X < m) {
    fail(ErrorCode::DegenerateDenominator,
         std::string(X == N ? "N" : "M") + " = " + std::to_string(X) + " < m = " + std::to_string(m));
  }
  const int tri = m * (m - 1) / 2;
  Rational den = pow(Rational(2), tri);
  for (int k = 1; k < m; ++k) den *= pow(Rational(X - k), m - k);

  const std::vector<int> ns = spec.degrees();
  const int nsum = std::accumulate(ns.begin(), ns.end(), 0);
  Rational value = d_determinant(N, M, ns) / den;
  if (side == -1) {
    value *= Rational(parity_sign(nsum + tri));
    for (const auto& s : spec.steps) value *= s.lambda * coeff_b(N, M, s.n);
  } else {
    value *= Rational(parity_sign(nsum - m * M));
    for (const auto& s : spec.steps) {
      value *= Rational(parity_sign(s.n - N + 1)) * s.lambda + coeff_lambda_star(N, M, s.n);
      value *= swapped ? coeff_b(M, N, s.n) : coeff_b(N, M, s.n);
    }
  }
  return value;
}

}  // namespace

Rational coeff_A(int N, int M, int nj, int k) {
  if (k < 0 || k > nj) fail(ErrorCode::BadIndex, "coeff_A needs 0 <= k <= n_j");
  return falling_factorial(Rational(N + M - nj - 1), k) / falling_factorial(Rational(nj), k);
}

RatPoly shifted_seed(int N, int M, int n, int k, const Rational& lambda) {
  if (k == 0) return para_jacobi({N, M, n, lambda});
  const Rational scale = falling_factorial(Rational(n), k);
  const int Nk = N - k;
  const int Mk = M - k;
  const int nk = n - k;
  if (in_window(Nk, Mk, nk)) return para_jacobi({Nk, Mk, nk, coeff_A(N, M, n, k) * lambda}) * scale;
  if (Nk >= 1 && Mk >= 1 && nk >= std::max(Nk, Mk)) return para_jacobi_base(Nk, Mk, nk) * scale;
  return derivative(para_jacobi({N, M, n, lambda}), k);
}

std::vector<RatPoly> seeds(const ChainSpec& spec) {
  std::vector<RatPoly> out;
  for (const auto& s : spec.steps) out.push_back(para_jacobi({spec.N, spec.M, s.n, s.lambda}));
  return out;
}

RatPoly RMatrix::det() const { return bareiss_determinant(entries); }

RMatrix r_matrix(const ChainSpec& spec, int rows) {
  const int m = spec.m();
  if (rows < 0) rows = m;
  const std::vector<RatPoly> row0 = seeds(spec);
  RMatrix r{spec, Grid<RatPoly>(static_cast<std::size_t>(rows))};
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < m; ++j) {
      r.entries[i].push_back(i == 0 ? row0[j] : derivative(r.entries[i - 1][j], 1));
    }
  }
  return r;
}

Rational d_determinant(int N, int M, const std::vector<int>& ns) {
  const std::size_t m = ns.size();
  Grid<Rational> d(m, std::vector<Rational>(m));
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) {
      const int kk = static_cast<int>(k);
      d[k][j] = falling_factorial(Rational(ns[j]), kk) * falling_factorial(Rational(M + N - ns[j] - 1), kk);
    }
  }
  return bareiss_determinant(std::move(d));
}

Rational boundary_det_closed_form(const ChainSpec& spec, int side) { return boundary_form(spec, side, true); }

Rational boundary_det_symmetric_form(const ChainSpec& spec, int side) { return boundary_form(spec, side, false); }

Rational two_step_boundary(const ChainSpec& spec, int side) {
  require_two_step(spec);
  const int N = spec.N;
  const int M = spec.M;
  const auto& s1 = spec.steps[0];
  const auto& s2 = spec.steps[1];
  const Rational de = energy(-s1.n - 1, N, M) - energy(-s2.n - 1, N, M);
  if (side == -1) {
    if (M < 2) fail(ErrorCode::DegenerateDenominator, "M = 1 in the two-step -1 form");
    return Rational(parity_sign(s1.n + s2.n - 1)) * coeff_b(N, M, s1.n) * coeff_b(N, M, s2.n) /
           (Rational(8) * Rational(M - 1)) * de * s1.lambda * s2.lambda;
  }
  if (side != 1) fail(ErrorCode::BadIndex, "side must be +1 or -1");
  if (N < 2) fail(ErrorCode::DegenerateDenominator, "N = 1 in the two-step +1 form");
  const Rational f1 = s1.lambda + Rational(parity_sign(s1.n - N + 1)) * coeff_lambda_star(N, M, s1.n);
  const Rational f2 = s2.lambda + Rational(parity_sign(s2.n - N + 1)) * coeff_lambda_star(N, M, s2.n);
  return coeff_b(M, N, s1.n) * coeff_b(M, N, s2.n) / (Rational(8) * Rational(N - 1)) * f1 * f2 * de;
}

PotentialExpr extended_potential(const ChainSpec& spec) {
  const ChainReport report = validate_chain(spec);
  if (!report.regular()) {
    std::string why;
    for (const auto& v : report.violations) why += (why.empty() ? "" : "; ") + v;
    fail(ErrorCode::IrregularChain, why);
  }
  const int m = spec.m();
  return {{spec.N - m, spec.M - m}, energy(-m, spec.N, spec.M), r_matrix(spec).det()};
}

RatPoly eop(const ChainSpec& spec, int k) {
  const int m = spec.m();
  if (k >= 0) {
    RMatrix r = r_matrix(spec, m + 1);
    for (int i = 0; i <= m; ++i) {
      const Rational c = pow(Rational(-2), i) * falling_factorial(Rational(k + i), i);
      r.entries[i].push_back(pow(one_minus_z2(), m - i) * jacobi_poly(k + i, spec.N - i, spec.M - i) * c);
    }
    return r.det();
  }
  for (int i = 0; i < m; ++i) {
    if (k != -spec.steps[i].n - 1) continue;
    const RMatrix r = r_matrix(spec, m - 1);
    Grid<RatPoly> minor;
    for (const auto& row : r.entries) {
      std::vector<RatPoly> kept;
      for (int j = 0; j < m; ++j) {
        if (j != i) kept.push_back(row[j]);
      }
      minor.push_back(std::move(kept));
    }
    return bareiss_determinant(std::move(minor));
  }
  fail(ErrorCode::BadIndex, "k = " + std::to_string(k) + " is neither >= 0 nor one of -n_i - 1");
}

TUV two_step_tuv(const ChainSpec& spec) {
  require_two_step(spec);
  const int N = spec.N;
  const int M = spec.M;
  const auto& a = spec.steps[0];
  const auto& b = spec.steps[1];
  const RatPoly a0 = shifted_seed(N, M, a.n, 0, a.lambda);
  const RatPoly a1 = shifted_seed(N, M, a.n, 1, a.lambda);
  const RatPoly a2 = shifted_seed(N, M, a.n, 2, a.lambda);
  const RatPoly b0 = shifted_seed(N, M, b.n, 0, b.lambda);
  const RatPoly b1 = shifted_seed(N, M, b.n, 1, b.lambda);
  const RatPoly b2 = shifted_seed(N, M, b.n, 2, b.lambda);
  return {a0 * b1 - a1 * b0, a0 * b2 - a2 * b0, a1 * b2 - a2 * b1};
}

RatPoly two_step_eop(const ChainSpec& spec, int k) {
  if (k < 0) fail(ErrorCode::BadIndex, "two_step_eop needs k >= 0");
  const TUV t = two_step_tuv(spec);
  const int N = spec.N;
  const int M = spec.M;
  return t.T * jacobi_poly(k + 2, N - 2, M - 2) * Rational(4 * (k + 1) * (k + 2)) +
         t.U * one_minus_z2() * jacobi_poly(k + 1, N - 1, M - 1) * Rational(2 * (k + 1)) +
         t.V * pow(one_minus_z2(), 2) * jacobi_poly(k, N, M);
}

Rational measure_weight(const ChainSpec& spec, const Rational& z) {
  const int m = spec.m();
  const Rational w = r_matrix(spec).det()(z);
  if (w.is_zero()) fail(ErrorCode::PoleAtZ, "det R vanishes at z = " + z.str());
  return pow(Rational(1) - z, spec.N - m) * pow(Rational(1) + z, spec.M - m) / (w * w);
}

Eigenfunction eigenfunction(const ChainSpec& spec, int k) {
  const int m = spec.m();
  return {ground_state_gauge({spec.N - m, spec.M - m}), eop(spec, k), r_matrix(spec).det(), energy(k, spec.N, spec.M)};
}

EOPFamily eop_family(const ChainSpec& spec, int kmax) {
  const int m = spec.m();
  EOPFamily f{spec, spec.N - m, spec.M - m, r_matrix(spec).det(), {}, 0};
  for (const auto& s : spec.steps) {
    const int k = -s.n - 1;
    f.members.push_back({k, eop(spec, k).degree(), energy(k, spec.N, spec.M)});
  }
  for (int k = 0; k <= kmax; ++k) f.members.push_back({k, eop(spec, k).degree(), energy(k, spec.N, spec.M)});
  std::sort(f.members.begin(), f.members.end(), [](const EOPMember& a, const EOPMember& b) { return a.k < b.k; });
  const int d0 = eop(spec, 0).degree();
  std::set<int> below;
  for (const auto& mem : f.members) {
    if (mem.degree >= 0 && mem.degree < d0) below.insert(mem.degree);
  }
  f.codimension = d0 - static_cast<int>(below.size());
  return f;
}

std::vector<EnergyLevel> expected_spectrum(const ChainSpec& spec, int count) {
  std::vector<EnergyLevel> levels;
  for (const auto& s : spec.steps) levels.push_back({-s.n - 1, energy(-s.n - 1, spec.N, spec.M)});
  for (int k = 0; static_cast<int>(levels.size()) < count + spec.m(); ++k) levels.push_back({k, energy(k, spec.N, spec.M)});
  std::sort(levels.begin(), levels.end(), [](const EnergyLevel& a, const EnergyLevel& b) { return a.value < b.value; });
  levels.resize(static_cast<std::size_t>(std::max(count, 0)));
  return levels;
}

void to_json(nlohmann::json& j, const EOPFamily& f) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& mem : f.members) {
    members.push_back({{"k", mem.k}, {"degree", mem.degree}, {"energy", mem.energy}});
  }
  j = nlohmann::json{{"chain", f.spec},
                     {"weight", {{"one_minus_z_exponent", f.weight_exponent_minus},
                                 {"one_plus_z_exponent", f.weight_exponent_plus},
                                 {"denominator_squared", f.weight_denominator}}},
                     {"members", std::move(members)},
                     {"codimension", f.codimension}};
}

}  // namespace pjx

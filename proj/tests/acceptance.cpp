#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pjx/checks.hpp"
#include "pjx/cli.hpp"
#include "pjx/extension.hpp"
#include "pjx/parajacobi.hpp"
#include "pjx/verify.hpp"

using namespace pjx;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Info {
  std::string text;
};

std::vector<Info> infos;

RatPoly P(std::initializer_list<Rational> c) { return RatPoly(c); }

const ChainSpec& example() {
  static const ChainSpec c{3, 3, {{4, Rational(-1)}, {3, Rational(1)}}};
  return c;
}

ChainSpec pair(const Rational& l1, const Rational& l2) { return {3, 3, {{4, l1}, {3, l2}}}; }

// Displayed worked-example polynomials, transcribed coefficient by coefficient.
RatPoly printed_omega(const Rational& a, const Rational& b) {
  return P({Rational(8) * a - Rational(16, 3) * b - Rational(16, 3) * a * b - Rational(1), Rational(4) * b - Rational(6),
            Rational(16) * a * b - Rational(24) * a + Rational(16) * b - Rational(15),
            Rational(8, 3) * b - Rational(16) * a - Rational(20), Rational(-15), Rational(4) * b - Rational(6),
            Rational(-1)});
}

RatPoly printed_A(const Rational& a, const Rational& b) {
  return P({-(Rational(2) * b - Rational(3)), Rational(24) * a - Rational(16) * b - Rational(16) * a * b + Rational(15),
            Rational(24) * a - Rational(4) * b + Rational(30), Rational(30), Rational(15) - Rational(10) * b,
            Rational(3)});
}

RatPoly printed_B(const Rational& a, const Rational& b) {
  return P({Rational(16) * b - Rational(24) * a + Rational(16) * a * b - Rational(15),
            Rational(6) * b - Rational(48) * a - Rational(57),
            Rational(48) * a - Rational(32) * b - Rational(32) * a * b - Rational(60),
            Rational(28) * b + Rational(72) * a + Rational(30), Rational(105), -(Rational(50) * b - Rational(75)),
            Rational(18)});
}

RatFunc printed_potential(const Rational& a, const Rational& b, const Rational& constant) {
  const RatPoly w = P({1, 0, -1});
  const RatPoly omega = printed_omega(a, b);
  const RatPoly A = printed_A(a, b);
  return RatFunc(P({3}), w) + RatFunc(P({constant})) + RatFunc(w * A * A * Rational(32), omega * omega) -
         RatFunc(printed_B(a, b) * Rational(16), omega);
}

// Bilinear coefficients (c00, c10, c01, c11) of f on the grid {a0,a1} x {b0,b1}.
std::array<RatPoly, 4> bilinear(const std::function<RatPoly(const Rational&, const Rational&)>& f, const Rational& a0,
                                const Rational& a1, const Rational& b0, const Rational& b1) {
  // Lagrange factor for node i on axis (x0, x1): slope and intercept.
  auto factor = [](const Rational& xi, const Rational& xo) {
    const Rational s = Rational(1) / (xi - xo);
    return std::pair<Rational, Rational>{s, -xo * s};
  };
  const Rational as[2]{a0, a1}, bs[2]{b0, b1};
  std::array<RatPoly, 4> c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const RatPoly v = f(as[i], bs[j]);
      const auto [si, ii] = factor(as[i], as[1 - i]);
      const auto [sj, ij] = factor(bs[j], bs[1 - j]);
      c[0] += v * (ii * ij);
      c[1] += v * (si * ij);
      c[2] += v * (ii * sj);
      c[3] += v * (si * sj);
    }
  }
  return c;
}

RatPoly eval_bilinear(const std::array<RatPoly, 4>& c, const Rational& a, const Rational& b) {
  return c[0] + c[1] * a + c[2] * b + c[3] * (a * b);
}

Outcome criterion1() {
  std::ostringstream os;
  bool ok = true;

  const auto polys = checks::worked_example_polynomials();
  ok = ok && polys.passed;
  os << "p3/p4/p5 and lambda* " << (polys.passed ? "match" : "DIFFER");

  // Five samples inside the regular box: a 2x2 grid for interpolation and one probe.
  const Rational a0(-1, 2), a1(-3, 2), b0(1, 3), b1(5, 2);
  const Rational pa(-1), pb(1);
  auto det_at = [](const Rational& a, const Rational& b) { return r_matrix(pair(a, b)).det(); };
  const auto ours = bilinear(det_at, a0, a1, b0, b1);
  const auto printed = bilinear(printed_omega, a0, a1, b0, b1);
  const bool probe_ok = eval_bilinear(ours, pa, pb) == det_at(pa, pb);
  const bool omega_ok = ours == printed;
  ok = ok && probe_ok && omega_ok;
  os << "; det R bilinear in (l1,l2) " << (probe_ok ? "confirmed" : "NOT confirmed") << ", equals printed Omega "
     << (omega_ok ? "yes" : "NO");

  const std::vector<std::pair<Rational, Rational>> samples{{a0, b0}, {a1, b0}, {a0, b1}, {a1, b1}, {pa, pb}};
  int printed_match = 0, derived_match = 0;
  for (const auto& [a, b] : samples) {
    const RatFunc v = extended_potential(pair(a, b)).as_rational_function();
    if (v == printed_potential(a, b, Rational(-17))) ++printed_match;
    if (v == printed_potential(a, b, Rational(-49))) ++derived_match;
  }
  const bool potential_ok = printed_match == static_cast<int>(samples.size());
  ok = ok && potential_ok;
  os << "; extended potential equals the printed display (constant -17, printed A, B) on " << printed_match << "/"
     << samples.size() << " samples";
  std::ostringstream note;
  note << "criterion 1: with constant -49 = -9 + E_{-2}(3,3) in place of -17, the printed A and B reproduce the "
          "extended potential on "
       << derived_match << "/" << samples.size() << " samples";
  infos.push_back({note.str()});
  return {ok, os.str()};
}

Outcome criterion2() {
  const auto r = checks::identity_suite();
  return {r.passed, r.detail};
}

Outcome criterion3() {
  const auto a = checks::boundary_closed_forms();
  const auto b = checks::two_step_boundary_forms();
  int chains = 0, differs = 0, differs_n_ne_m = 0;
  for (const auto& c : checks::boundary_sweep()) {
    ++chains;
    if (boundary_det_symmetric_form(c, 1) != r_matrix(c).det()(Rational(1))) {
      ++differs;
      if (c.N != c.M) ++differs_n_ne_m;
    }
  }
  std::ostringstream note;
  note << "criterion 3: the +1 form with b^{(N,M)} and (M-k) taken verbatim misses on " << differs << "/" << chains
       << " chains, all with N != M (" << differs_n_ne_m << "); the swapped form b^{(M,N)}, (N-k) matches everywhere";
  infos.push_back({note.str()});
  return {a.passed && b.passed, "m-step: " + a.detail + "; two-step: " + b.detail};
}

Outcome criterion4() {
  const auto a = checks::regularity_soundness();
  const auto b = checks::two_step_tables();
  return {a.passed && b.passed, a.detail + "; " + b.detail};
}

Outcome criterion5() {
  const auto a = checks::residual_bound_states();
  const auto b = checks::residual_para_jacobi();
  const auto c = checks::residual_chain_eigenfunctions();
  return {a.passed && b.passed && c.passed, "(a) " + a.detail + "; (b) " + b.detail + "; (c) " + c.detail};
}

Outcome criterion6() {
  std::vector<Rational> expected{energy(-5, 3, 3), energy(-4, 3, 3)};
  for (int k = 0; k < 4; ++k) expected.push_back(energy(k, 3, 3));
  std::sort(expected.begin(), expected.end());
  const std::vector<Rational> want{Rational(-48), Rational(-40), Rational(0), Rational(32), Rational(72), Rational(120)};
  const SpectrumReport r = fd_spectrum(extended_potential(example()), 4000, 6, expected);
  std::ostringstream os;
  os << std::setprecision(8) << "computed";
  for (double v : r.computed) os << ' ' << v;
  os << std::setprecision(3) << "; max rel error " << r.max_rel_error << ", abs error at 0 "
     << r.max_abs_error_at_zero;
  const bool ok = expected == want && r.max_rel_error < 1e-3 && r.max_abs_error_at_zero < 0.05;
  return {ok, os.str()};
}

Outcome criterion7() {
  const GramReport g = gram_matrix(example(), {-5, -4, 0, 1, 2, 3}, 256);
  std::ostringstream os;
  os << std::setprecision(3) << "max normalized off-diagonal " << g.max_normalized_off_diagonal << " at order "
     << g.order << "; diagonals " << (g.diagonal_positive ? "positive" : "NOT positive");
  return {g.diagonal_positive && g.max_normalized_off_diagonal < 1e-8, os.str()};
}

struct CsvStats {
  int rows = 0;
  int finite = 0;
  bool header_ok = false;
};

CsvStats scan_csv(const std::string& text, const std::string& header) {
  CsvStats s;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  s.header_ok = line == header;
  while (std::getline(in, line)) {
    ++s.rows;
    const double v = std::stod(line.substr(line.rfind(',') + 1));
    if (std::isfinite(v)) ++s.finite;
  }
  return s;
}

Outcome criterion8() {
  std::ostringstream out, err;
  const int code = cli::run({"extend", "--N", "3", "--M", "3", "--chain", "4,3", "--lambdas", "-1,1", "--plot",
                             "--samples", "501"},
                            out, err);
  std::ostringstream os;
  if (code != 0) return {false, "extend --plot exited with " + std::to_string(code) + ": " + err.str()};
  std::optional<double> at_zero;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (std::stod(line.substr(0, comma)) == 0.0) at_zero = std::stod(line.substr(comma + 1));
  }
  if (!at_zero) return {false, "z = 0 is not on the sampled grid"};
  const double target = 194.0 / 81.0;
  const bool value_ok = std::abs(*at_zero - target) <= 4.0 * std::numeric_limits<double>::epsilon() * target;
  os << std::setprecision(17) << "V(0) from extend --plot = " << *at_zero << ", expected 194/81 = " << target;

  const std::vector<std::vector<std::string>> sweeps{
      {"plot", "--N", "3", "--M", "3", "--chain", "4,3", "--lambdas", "-1,1", "--sweep", "1"},
      {"plot", "--N", "3", "--M", "3", "--chain", "4,3", "--lambdas", "-1,1", "--sweep", "2"}};
  bool grids_ok = true;
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    std::ostringstream o, e;
    const int c = cli::run(sweeps[i], o, e);
    const CsvStats s = c == 0 ? scan_csv(o.str(), "z,sweep,V") : CsvStats{};
    const bool ok = c == 0 && s.header_ok && s.rows > 0 && s.finite == s.rows;
    grids_ok = grids_ok && ok;
    os << "; sweep of lambda" << i + 1 << ": " << s.finite << "/" << s.rows << " finite";
  }
  return {value_ok && grids_ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked-example exactness", criterion1},
      {"identity suite", criterion2},
      {"boundary closed forms", criterion3},
      {"regularity soundness", criterion4},
      {"eigen-equation exactness", criterion5},
      {"finite-difference spectrum", criterion6},
      {"orthogonality", criterion7},
      {"figure data", criterion8}};
  const std::vector<double> limits{1.0, 10.0, 0.0, 0.0, 0.0, 30.0, 0.0, 0.0};

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limits[i] > 0.0 && secs >= limits[i]) {
      o.passed = false;
      std::ostringstream os;
      os << "; runtime over the " << limits[i] << " s budget";
      o.detail += os.str();
    }
    all_ok = all_ok && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::fixed << std::setprecision(2) << " [" << secs << " s]" << std::defaultfloat << '\n';
  }
  for (const auto& info : infos) std::cout << "INFO " << info.text << '\n';
  return all_ok ? 0 : 1;
}

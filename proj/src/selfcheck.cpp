#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "pjx/checks.hpp"
#include "pjx/errors.hpp"
#include "pjx/extension.hpp"
#include "pjx/parajacobi.hpp"
#include "pjx/verify.hpp"

namespace pjx::checks {

namespace {

RatPoly poly(std::initializer_list<Rational> c) { return RatPoly(c); }

std::mt19937& rng() {
  static std::mt19937 gen(20261014u);
  return gen;
}

Rational random_rational() {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 7);
  return Rational(num(rng()), den(rng()));
}

// Decreasing m-tuples from the window [max(N,M), N+M).
std::vector<std::vector<int>> decreasing_tuples(int N, int M, int m) {
  std::vector<std::vector<int>> out;
  const int lo = std::max(N, M);
  const int hi = N + M - 1;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int n = top; n >= lo; --n) {
      cur.push_back(n);
      rec(n - 1);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

std::string chain_text(const ChainSpec& s) {
  std::ostringstream os;
  os << "(N,M)=(" << s.N << ',' << s.M << ") [";
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    if (i) os << ", ";
    os << '(' << s.steps[i].n << ',' << s.steps[i].lambda.str() << ')';
  }
  os << ']';
  return os.str();
}

struct Tally {
  int total = 0;
  int bad = 0;
  std::string first;

  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) return;
    if (bad == 0) first = what;
    ++bad;
  }

  CheckResult result(std::string name) const {
    std::ostringstream os;
    os << total - bad << '/' << total << " cases";
    if (bad) os << "; first failure: " << first;
    return {std::move(name), bad == 0 && total > 0, os.str()};
  }
};

const ChainSpec& worked_chain() {
  static const ChainSpec c{3, 3, {{4, Rational(-1)}, {3, Rational(1)}}};
  return c;
}

}  // namespace

std::optional<Rational> outside_sample(const IntervalSet& s) {
  const auto& parts = s.components();
  if (parts.empty()) return Rational(0);
  if (parts.front().lo) return *parts.front().lo - Rational(1);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const Rational& a = *parts[i].hi;
    const Rational& b = *parts[i + 1].lo;
    if (a < b) return (a + b) / Rational(2);
  }
  if (parts.back().hi) return *parts.back().hi + Rational(1);
  return std::nullopt;
}

std::vector<Rational> lambda_samples(const IntervalSet& s, int count, bool with_outside) {
  std::vector<std::vector<Rational>> per;
  for (const auto& c : s.components()) {
    std::vector<Rational> pts;
    if (c.lo && c.hi) {
      const Rational w = *c.hi - *c.lo;
      pts = {*c.lo + w / Rational(3), *c.lo + w * Rational(2, 3), *c.lo + w / Rational(7), *c.lo + w * Rational(6, 7),
             *c.lo + w / Rational(2)};
    } else if (c.hi) {
      pts = {*c.hi - Rational(1), *c.hi - Rational(5, 2), *c.hi - Rational(1, 10), *c.hi - Rational(7), *c.hi - Rational(30)};
    } else if (c.lo) {
      pts = {*c.lo + Rational(1), *c.lo + Rational(5, 2), *c.lo + Rational(1, 10), *c.lo + Rational(7), *c.lo + Rational(30)};
    } else {
      pts = {Rational(0), Rational(1), Rational(-1), Rational(3), Rational(-3)};
    }
    per.push_back(std::move(pts));
  }
  std::vector<Rational> out;
  for (std::size_t j = 0; j < 5 && static_cast<int>(out.size()) < count; ++j) {
    for (const auto& pts : per) {
      if (static_cast<int>(out.size()) < count) out.push_back(pts[j]);
    }
  }
  if (with_outside) {
    if (auto o = outside_sample(s)) out.push_back(*o);
  }
  return out;
}

std::vector<ChainSpec> boundary_sweep() {
  std::vector<ChainSpec> out;
  for (int N = 1; N <= 5; ++N) {
    for (int M = 1; M <= 5; ++M) {
      for (int m = 1; m <= 3; ++m) {
        if (std::min(N, M) < m) continue;
        for (const auto& ns : decreasing_tuples(N, M, m)) {
          std::vector<std::vector<Rational>> samples;
          for (int i = 0; i < m; ++i) samples.push_back(lambda_samples(step_interval(i + 1, N, M, ns[i]), 2, true));
          std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
          while (true) {
            ChainSpec c{N, M, {}};
            for (int i = 0; i < m; ++i) c.steps.push_back({ns[i], samples[i][idx[i]]});
            out.push_back(std::move(c));
            int i = m - 1;
            while (i >= 0 && ++idx[i] == samples[i].size()) idx[i--] = 0;
            if (i < 0) break;
          }
        }
      }
    }
  }
  return out;
}

CheckResult worked_example_polynomials() {
  Tally t;
  const auto p3 = para_jacobi_parts(3, 3, 3);
  const auto p4 = para_jacobi_parts(3, 3, 4);
  const auto p5 = para_jacobi_parts(3, 3, 5);
  t.record(p3.base == poly({1, 3, 3, 1}) && p3.tail == poly({Rational(-2, 3), 0, -2}), "p3");
  t.record(p4.base == poly({-3, -8, -6, 0, 1}) && p4.tail == poly({0, -8}), "p4");
  t.record(p5.base == poly({Rational(8, 3), 5, 0, Rational(-10, 3), 0, 1}) && p5.tail == poly({-32}), "p5");
  t.record(coeff_lambda_star(3, 3, 3) == Rational(3), "lambda*_3");
  t.record(coeff_lambda_star(3, 3, 4) == Rational(2), "lambda*_4");
  t.record(coeff_lambda_star(3, 3, 5) == Rational(1, 6), "lambda*_5");
  return t.result("worked example: p3, p4, p5 and lambda*");
}

CheckResult worked_example_wronskian() {
  // Omega is at most bilinear in (l1, l2): recover its four coefficient
  // polynomials from four samples, confirm on a fifth, compare with the
  // expanded determinant.
  auto det_at = [](const Rational& l1, const Rational& l2) {
    return r_matrix({3, 3, {{4, l1}, {3, l2}}}).det();
  };
  const RatPoly c00 = det_at(0, 0);
  const RatPoly c10 = det_at(1, 0) - c00;
  const RatPoly c01 = det_at(0, 1) - c00;
  const RatPoly c11 = det_at(1, 1) - c00 - c10 - c01;
  Tally t;
  const std::vector<std::pair<Rational, Rational>> probes{{Rational(2), Rational(-3)}, {Rational(-1, 2), Rational(5, 3)}};
  for (const auto& [l1, l2] : probes) {
    t.record(det_at(l1, l2) == c00 + c10 * l1 + c01 * l2 + c11 * (l1 * l2), "bilinearity");
  }
  t.record(c00 == poly({-1, -6, -15, -20, -15, -6, -1}), "lambda-free part");
  t.record(c10 == poly({8, 0, -24, -16}), "lambda1 part");
  t.record(c01 == poly({Rational(-16, 3), 4, 16, Rational(8, 3), 0, 4}), "lambda2 part");
  t.record(c11 == poly({Rational(-16, 3), 0, 16}), "lambda1 lambda2 part");
  t.record(c00 + c10 * Rational(-1) + c01 + c11 * Rational(-1) == wronskian(std::vector<RatPoly>{
               para_jacobi({3, 3, 4, Rational(-1)}), para_jacobi({3, 3, 3, Rational(1)})}),
           "det R = W at (-1, 1)");
  return t.result("worked example: det R(4,3) equals Omega");
}

CheckResult identity_suite() {
  Tally t;
  for (int N = 2; N <= 6; ++N) {
    for (int M = 2; M <= 6; ++M) {
      for (int n = std::max(N, M); n < N + M; ++n) {
        const std::string where = "(N,M,n)=(" + std::to_string(N) + "," + std::to_string(M) + "," + std::to_string(n) + ")";
        t.record(coeff_b(N - 1, M - 1, n - 1) == Rational(n) * coeff_b(N, M, n) / Rational(2 * (M - 1)), "b-b " + where);
        const Rational swap = Rational(factorial(N - 1)) * Rational(factorial(n - N)) /
                              (Rational(factorial(M - 1)) * Rational(factorial(n - M)));
        t.record(coeff_b(M, N, n) == swap * coeff_b(N, M, n), "b swap " + where);
        if (in_window(N - 1, M - 1, n - 1)) {
          t.record(coeff_lambda_star(N - 1, M - 1, n - 1) == coeff_a(N, M, n) * coeff_lambda_star(N, M, n),
                   "lambda-lambda " + where);
        }
        for (int s = 0; s < 5; ++s) {
          const Rational lambda = random_rational();
          const RatPoly p = para_jacobi({N, M, n, lambda});
          const std::string at = where + " lambda=" + lambda.str();
          t.record(p.degree() == n && p.leading() == Rational(1), "monic " + at);
          const RatPoly shifted = in_window(N - 1, M - 1, n - 1)
                                      ? para_jacobi({N - 1, M - 1, n - 1, coeff_a(N, M, n) * lambda})
                                      : para_jacobi_base(N - 1, M - 1, n - 1);
          t.record(derivative(p, 1) == shifted * Rational(n), "derivation " + at);
          t.record(reflect(p) == para_jacobi({M, N, n, affine_g(N, M, n, lambda)}) * Rational(parity_sign(n)),
                   "symmetry " + at);
          const BoundaryValues bv = boundary_values({N, M, n, lambda});
          t.record(p(Rational(-1)) == bv.at_minus_one && p(Rational(1)) == bv.at_plus_one, "boundary " + at);
        }
      }
    }
  }
  // Jacobi polynomials against the three-term recurrence.
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; b <= 6; ++b) {
      std::vector<RatPoly> rec{RatPoly(Rational(1)), RatPoly{Rational(a - b, 2), Rational(a + b + 2, 2)}};
      for (int k = 2; k <= 10; ++k) {
        const int s = 2 * k + a + b;
        const RatPoly lin{Rational(a * a - b * b), Rational(s * (s - 2))};
        const RatPoly next = (lin * rec[k - 1] * Rational(s - 1) - rec[k - 2] * Rational(2 * (k + a - 1) * (k + b - 1) * s)) *
                             (Rational(1) / Rational(2 * k * (k + a + b) * (s - 2)));
        rec.push_back(next);
      }
      for (int k = 0; k <= 10; ++k) {
        t.record(jacobi_poly(k, a, b) == rec[k],
                 "Jacobi P_" + std::to_string(k) + "^(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
  return t.result("identity suite: derivation, symmetry, boundary, coefficient identities");
}

CheckResult boundary_closed_forms() {
  Tally t;
  int symmetric_misses = 0;
  for (const auto& c : boundary_sweep()) {
    const RatPoly w = r_matrix(c).det();
    t.record(w == wronskian(seeds(c)), "det R = W " + chain_text(c));
    for (int side : {-1, 1}) {
      t.record(boundary_det_closed_form(c, side) == w(Rational(side)),
               "side " + std::to_string(side) + " " + chain_text(c));
    }
    if (boundary_det_symmetric_form(c, 1) != w(Rational(1))) ++symmetric_misses;
  }
  CheckResult r = t.result("boundary closed forms of det R at z = -1 and z = +1");
  r.detail += "; symmetric +1 form differs on " + std::to_string(symmetric_misses) + " chains";
  return r;
}

CheckResult two_step_boundary_forms() {
  Tally t;
  for (const auto& c : boundary_sweep()) {
    if (c.m() != 2) continue;
    const RatPoly w = r_matrix(c).det();
    for (int side : {-1, 1}) {
      t.record(two_step_boundary(c, side) == w(Rational(side)), "side " + std::to_string(side) + " " + chain_text(c));
    }
  }
  return t.result("two-step boundary values via the energy difference");
}

CheckResult regularity_soundness() {
  Tally t;
  int regular = 0;
  int outside = 0;
  for (const auto& c : boundary_sweep()) {
    const ChainReport rep = validate_chain(c);
    if (rep.regular()) {
      ++regular;
      t.record(nodeless(c), "regular but det R has a root: " + chain_text(c));
      continue;
    }
    // Exactly one step outside its interval, every other step inside its own.
    if (!rep.ordering_ok || !rep.window_ok || !rep.confinement_ok) continue;
    const auto misses = std::count_if(rep.steps.begin(), rep.steps.end(), [](const StepReport& st) { return !st.in_interval; });
    if (misses != 1) continue;
    ++outside;
    const int roots = sturm_root_count(r_matrix(c).det(), Rational(-1), Rational(1));
    t.record(roots >= 1, "outside sample without a root: " + chain_text(c));
  }
  CheckResult r = t.result("regularity tables against Sturm counts");
  r.detail += " (" + std::to_string(regular) + " regular, " + std::to_string(outside) + " outside)";
  return r;
}

CheckResult two_step_tables() {
  Tally t;
  std::set<std::tuple<int, int, int>> classes;
  for (int N = 2; N <= 7; ++N) {
    for (int M = 2; M <= 7; ++M) {
      for (const auto& ns : decreasing_tuples(N, M, 2)) {
        const auto [i1, i2] = two_step_table(N, M, ns[0], ns[1]);
        const bool ok = i1 == one_step_interval(N, M, ns[0]) && i2 == step_interval(2, N, M, ns[1]);
        t.record(ok, "(N,M,n1,n2)=(" + std::to_string(N) + "," + std::to_string(M) + "," + std::to_string(ns[0]) + "," +
                         std::to_string(ns[1]) + ")");
        classes.insert({M % 2, (ns[0] - N) % 2, (ns[1] - N) % 2});
      }
    }
  }
  CheckResult r = t.result("two-step table equals one-step x step-2 tables");
  r.detail += "; parity classes covered: " + std::to_string(classes.size()) + "/8";
  r.passed = r.passed && classes.size() == 8;
  return r;
}

CheckResult residual_bound_states() {
  Tally t;
  for (int N = 1; N <= 5; ++N) {
    for (int M = 1; M <= 5; ++M) {
      for (int k = 0; k <= 4; ++k) {
        const TDPTParams p{N, M};
        const auto r = schrodinger_residual(ground_state_gauge(p), jacobi_poly(k, N, M), p, energy(k, N, M));
        t.record(r.is_zero, "TDPT(" + std::to_string(N) + "," + std::to_string(M) + ") k=" + std::to_string(k));
      }
    }
  }
  const TDPTParams p{3, 3};
  const auto control = schrodinger_residual(ground_state_gauge(p), jacobi_poly(2, 3, 3), p, energy(2, 3, 3) + Rational(1));
  t.record(!control.is_zero, "shifted energy must not be an eigenvalue");
  return t.result("Schrodinger residual: TDPT bound states k <= 4");
}

CheckResult residual_para_jacobi() {
  Tally t;
  for (int N = 1; N <= 5; ++N) {
    for (int M = 1; M <= 5; ++M) {
      for (int n = std::max(N, M); n < N + M; ++n) {
        for (int s = 0; s < 3; ++s) {
          const Rational lambda = random_rational();
          const auto r = schrodinger_residual(para_jacobi_gauge(N, M), para_jacobi({N, M, n, lambda}), TDPTParams{N, M},
                                              energy(-n - 1, N, M));
          t.record(r.is_zero, "(N,M,n)=(" + std::to_string(N) + "," + std::to_string(M) + "," + std::to_string(n) +
                                  ") lambda=" + lambda.str());
        }
      }
    }
  }
  const auto control = schrodinger_residual(para_jacobi_gauge(3, 3), para_jacobi({3, 3, 4, Rational(-1)}), TDPTParams{3, 3},
                                            energy(-5, 3, 3) + Rational(1));
  t.record(!control.is_zero, "shifted energy must not give a solution");
  return t.result("Schrodinger residual: para-Jacobi seeds at E_{-n-1}");
}

CheckResult residual_chain_eigenfunctions() {
  Tally t;
  for (const auto& c : boundary_sweep()) {
    std::vector<int> ks{0, 1, 2};
    for (const auto& s : c.steps) ks.push_back(-s.n - 1);
    for (int k : ks) {
      const auto r = chain_eigen_residual(c, k);
      t.record(r.is_zero, chain_text(c) + " k=" + std::to_string(k));
    }
  }
  return t.result("Schrodinger residual: chain eigenfunctions Q_k / det R");
}

CheckResult worked_example_spectrum() {
  const ChainSpec& c = worked_chain();
  std::vector<Rational> expected;
  for (const auto& e : expected_spectrum(c, 6)) expected.push_back(e.value);
  const SpectrumReport r = fd_spectrum(extended_potential(c), 4000, 6, expected);
  std::ostringstream os;
  os << "computed";
  for (double v : r.computed) os << ' ' << v;
  os << "; max rel error " << r.max_rel_error << ", abs error at 0 " << r.max_abs_error_at_zero;
  const bool ok = r.max_rel_error < 1e-3 && r.max_abs_error_at_zero < 0.05;
  return {"finite-difference spectrum of the (4,3) extension", ok, os.str()};
}

CheckResult worked_example_orthogonality() {
  const GramReport g = gram_matrix(worked_chain(), {-5, -4, 0, 1, 2, 3}, 256);
  std::ostringstream os;
  os << "max normalized off-diagonal " << g.max_normalized_off_diagonal << " at order " << g.order;
  const bool ok = g.diagonal_positive && g.max_normalized_off_diagonal < 1e-8;
  return {"Gram matrix of Q_k for the (4,3) extension", ok, os.str()};
}

CheckResult shape_invariance() {
  Tally t;
  for (int N = 2; N <= 6; ++N) {
    for (int M = 2; M <= 6; ++M) {
      const std::string where = "(" + std::to_string(N) + "," + std::to_string(M) + ")";
      t.record(shape_invariance_check(N, M), where);
      t.record(!shape_invariance_check(N, M, Rational(0)), "wrong constant accepted " + where);
    }
  }
  return t.result("shape invariance V(N,M) -> V(N-1,M-1) + E_{-1}");
}

std::vector<CheckResult> all() {
  return {worked_example_polynomials(), worked_example_wronskian(), identity_suite(),         boundary_closed_forms(),
          two_step_boundary_forms(),    regularity_soundness(),     two_step_tables(),        residual_bound_states(),
          residual_para_jacobi(),       residual_chain_eigenfunctions(), shape_invariance(), worked_example_spectrum(),
          worked_example_orthogonality()};
}

}  // namespace pjx::checks

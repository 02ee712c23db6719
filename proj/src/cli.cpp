#include "pjx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

#include "pjx/chains.hpp"
#include "pjx/checks.hpp"
#include "pjx/errors.hpp"
#include "pjx/extension.hpp"
#include "pjx/serialize.hpp"
#include "pjx/verify.hpp"

namespace pjx::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(item);
  return out;
}

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError(flag + ": cannot read '" + text + "' (expected an integer, p/q or a decimal such as -1.5)");
  }
}

std::vector<Rational> parse_rationals(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_list(text)) out.push_back(parse_rational(flag, s));
  return out;
}

std::vector<int> parse_ints(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw UsageError(flag + ": cannot read '" + s + "' (expected comma-separated integers such as 4,3)");
    }
    out.push_back(v);
  }
  return out;
}

struct ChainArgs {
  int N = 0;
  int M = 0;
  std::string chain;
  std::string lambdas;

  void add(CLI::App* cmd, bool chain_required, bool lambdas_required) {
    cmd->add_option("--N", N, "alpha = N >= 1")->required();
    cmd->add_option("--M", M, "beta = M >= 1")->required();
    auto* c = cmd->add_option("--chain", chain, "seed degrees n1,n2,... (strictly decreasing)");
    auto* l = cmd->add_option("--lambdas", lambdas, "rational lambda per seed, e.g. -1,1/2 or -1.5,2");
    if (chain_required) c->required();
    if (lambdas_required) l->required();
  }

  ChainSpec spec() const {
    ChainSpec s{N, M, {}};
    const std::vector<int> ns = chain.empty() ? std::vector<int>{} : parse_ints("--chain", chain);
    std::vector<Rational> ls;
    if (!lambdas.empty()) ls = parse_rationals("--lambdas", lambdas);
    if (lambdas.empty()) ls.assign(ns.size(), Rational(0));
    if (ls.size() != ns.size()) {
      throw UsageError("--lambdas: expected " + std::to_string(ns.size()) + " values to match --chain, got " +
                       std::to_string(ls.size()));
    }
    for (std::size_t i = 0; i < ns.size(); ++i) s.steps.push_back({ns[i], ls[i]});
    return s;
  }
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string csv_row(const Rational& a, const Rational& b) { return to_decimal(a) + "," + to_decimal(b) + "\n"; }

int cmd_pj(std::ostream& out, int N, int M, int n, const std::string& lambda_text) {
  const Rational lambda = parse_rational("--lambda", lambda_text);
  const RatPoly p = para_jacobi({N, M, n, lambda});
  const BoundaryValues bv = boundary_values({N, M, n, lambda});
  emit(out, json{{"N", N},
                 {"M", M},
                 {"n", n},
                 {"lambda", lambda},
                 {"coefficients", p},
                 {"boundary_values", {{"minus_one", bv.at_minus_one}, {"plus_one", bv.at_plus_one}}},
                 {"lambda_star", coeff_lambda_star(N, M, n)},
                 {"one_step_interval", one_step_interval(N, M, n)}});
  return 0;
}

int cmd_regularity(std::ostream& out, const ChainArgs& a) {
  const ChainSpec spec = a.spec();
  json steps = json::array();
  for (int i = 0; i < spec.m(); ++i) {
    const int n = spec.steps[i].n;
    steps.push_back({{"step", i + 1},
                     {"n", n},
                     {"lambda_star", coeff_lambda_star(spec.N, spec.M, n)},
                     {"interval", step_interval(i + 1, spec.N, spec.M, n)}});
  }
  json j{{"N", spec.N}, {"M", spec.M}, {"steps", std::move(steps)}};
  const ChainReport report = validate_chain(spec);
  if (!a.lambdas.empty()) {
    j["report"] = report;
  } else {
    j["ordering_ok"] = report.ordering_ok;
    j["confinement_ok"] = report.confinement_ok;
  }
  emit(out, j);
  const bool ok = a.lambdas.empty() ? report.ordering_ok : report.regular();
  return ok ? 0 : 1;
}

int cmd_extend(std::ostream& out, const ChainArgs& a, bool plot, int samples, const std::string& margin_text) {
  const ChainSpec spec = a.spec();
  const PotentialExpr v = extended_potential(spec);
  if (plot) {
    out << potential_csv(v, z_grid(samples, parse_rational("--margin", margin_text)));
    return 0;
  }
  const Rational v0 = v(Rational(0));
  emit(out, json{{"chain", spec},
                 {"regularity", validate_chain(spec)},
                 {"potential", v},
                 {"value_at_zero", {{"exact", v0}, {"decimal", to_decimal(v0)}}}});
  return 0;
}

int cmd_plot(std::ostream& out, const ChainArgs& a, int sweep, const std::string& from_text, const std::string& to_text,
             int sweep_samples, int samples, const std::string& margin_text) {
  ChainSpec spec = a.spec();
  if (sweep < 1 || sweep > spec.m()) {
    throw UsageError("--sweep: expected a step index in 1.." + std::to_string(spec.m()));
  }
  if (sweep_samples < 1) throw UsageError("--sweep-samples: expected a positive count");
  const Rational margin = parse_rational("--margin", margin_text);
  const std::size_t s = static_cast<std::size_t>(sweep - 1);
  const IntervalSet allowed = step_interval(sweep, spec.N, spec.M, spec.steps[s].n);

  auto component_of = [&](const Rational& x) -> std::optional<Interval> {
    for (const auto& c : allowed.components()) {
      if (c.contains(x)) return c;
    }
    return std::nullopt;
  };

  Rational from;
  Rational to;
  if (from_text.empty() || to_text.empty()) {
    const auto c = component_of(spec.steps[s].lambda);
    if (!c) fail(ErrorCode::SweepOutsideRegularity, "lambda_" + std::to_string(sweep) + " is not admissible");
    if (!c->lo || !c->hi) throw UsageError("--from/--to: required when the admissible component is unbounded");
    const Rational w = *c->hi - *c->lo;
    from = from_text.empty() ? *c->lo + w * margin : parse_rational("--from", from_text);
    to = to_text.empty() ? *c->hi - w * margin : parse_rational("--to", to_text);
  } else {
    from = parse_rational("--from", from_text);
    to = parse_rational("--to", to_text);
  }
  if (to < from) throw UsageError("--from/--to: need from <= to");
  const auto cf = component_of(from);
  if (!cf || !cf->contains(to)) {
    fail(ErrorCode::SweepOutsideRegularity,
         "sweep [" + from.str() + ", " + to.str() + "] leaves the admissible set " + allowed.str());
  }

  const std::vector<Rational> zs = z_grid(samples, margin);
  std::string body = "z,sweep,V\n";
  for (int j = 0; j < sweep_samples; ++j) {
    const Rational t = sweep_samples == 1 ? from : from + (to - from) * Rational(j, sweep_samples - 1);
    spec.steps[s].lambda = t;
    const PotentialExpr v = extended_potential(spec);
    const std::string ts = to_decimal(t);
    for (const auto& z : zs) body += to_decimal(z) + "," + ts + "," + to_decimal(v(z)) + "\n";
  }
  out << body;
  return 0;
}

int cmd_eop(std::ostream& out, const ChainArgs& a, const std::string& ks_text) {
  const ChainSpec spec = a.spec();
  std::vector<int> ks;
  if (ks_text.empty()) {
    for (const auto& st : spec.steps) ks.push_back(-st.n - 1);
    for (int k = 0; k <= 3; ++k) ks.push_back(k);
  } else {
    ks = parse_ints("--k", ks_text);
  }
  int kmax = 0;
  for (int k : ks) kmax = std::max(kmax, k);
  json polys = json::array();
  for (int k : ks) {
    const RatPoly q = eop(spec, k);
    polys.push_back({{"k", k}, {"degree", q.is_zero() ? -1 : q.degree()}, {"coefficients", q}});
  }
  emit(out, json{{"regularity", validate_chain(spec)}, {"family", eop_family(spec, kmax)}, {"polynomials", std::move(polys)}});
  return 0;
}

int cmd_spectrum(std::ostream& out, const ChainArgs& a, int grid, int levels, const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("--format: expected json or csv");
  const ChainSpec spec = a.spec();
  std::vector<Rational> expected;
  for (const auto& e : expected_spectrum(spec, levels)) expected.push_back(e.value);
  const SpectrumReport r = fd_spectrum(extended_potential(spec), grid, levels, expected);
  if (format == "csv") {
    out << r.csv();
  } else {
    emit(out, r);
  }
  return 0;
}

int cmd_orthogonality(std::ostream& out, const ChainArgs& a, const std::string& ks_text, int order) {
  const ChainSpec spec = a.spec();
  std::vector<int> ks;
  if (ks_text.empty()) {
    for (const auto& st : spec.steps) ks.push_back(-st.n - 1);
    for (int k = 0; k <= 3; ++k) ks.push_back(k);
  } else {
    ks = parse_ints("--k", ks_text);
  }
  emit(out, gram_matrix(spec, ks, order));
  return 0;
}

int cmd_selfcheck(std::ostream& out) {
  bool ok = true;
  for (const auto& r : checks::all()) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

std::vector<Rational> z_grid(int samples, const Rational& margin) {
  if (samples < 1) throw UsageError("--samples: expected a positive count");
  if (margin.sign() <= 0 || margin >= Rational(1, 2)) throw UsageError("--margin: expected 0 < margin < 1/2");
  const Rational lo = Rational(-1) + Rational(2) * margin;
  const Rational hi = Rational(1) - Rational(2) * margin;
  std::vector<Rational> out;
  if (samples == 1) return {Rational(0)};
  for (int i = 0; i < samples; ++i) out.push_back(lo + (hi - lo) * Rational(i, samples - 1));
  return out;
}

std::string potential_csv(const PotentialExpr& v, const std::vector<Rational>& zs) {
  std::string body = "z,V\n";
  for (const auto& z : zs) body += csv_row(z, v(z));
  return body;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational extensions of the trigonometric Darboux-Poschl-Teller potential", "pjx"};
  app.require_subcommand(1);

  int pj_N = 0, pj_M = 0, pj_n = 0;
  std::string pj_lambda;
  auto* pj = app.add_subcommand("pj", "para-Jacobi polynomial p_n^{(-N,-M)}(z; lambda)");
  pj->add_option("--N", pj_N)->required();
  pj->add_option("--M", pj_M)->required();
  pj->add_option("--n", pj_n)->required();
  pj->add_option("--lambda", pj_lambda)->required();

  ChainArgs reg_args;
  auto* reg = app.add_subcommand("regularity", "admissible lambda intervals for a chain");
  reg_args.add(reg, true, false);

  ChainArgs ext_args;
  bool ext_plot = false;
  int ext_samples = 500;
  std::string ext_margin = "1/1000";
  auto* ext = app.add_subcommand("extend", "extended potential of a regular chain");
  ext_args.add(ext, true, true);
  ext->add_flag("--plot", ext_plot, "emit z,V samples as CSV");
  ext->add_option("--samples", ext_samples, "number of z samples");
  ext->add_option("--margin", ext_margin, "distance kept from z = +-1, as a fraction of the interval");

  ChainArgs plot_args;
  int plot_sweep = 1;
  std::string plot_from, plot_to, plot_margin = "1/1000";
  int plot_sweep_samples = 41;
  int plot_samples = 201;
  auto* plt = app.add_subcommand("plot", "z x lambda_s surface of the extended potential as CSV");
  plot_args.add(plt, true, true);
  plt->add_option("--sweep", plot_sweep, "1-based step whose lambda is swept")->required();
  plt->add_option("--from", plot_from, "first sweep value");
  plt->add_option("--to", plot_to, "last sweep value");
  plt->add_option("--sweep-samples", plot_sweep_samples, "number of sweep values");
  plt->add_option("--samples", plot_samples, "number of z samples");
  plt->add_option("--margin", plot_margin, "margin kept from interval ends, as a fraction of the interval");

  ChainArgs eop_args;
  std::string eop_k;
  auto* eo = app.add_subcommand("eop", "exceptional polynomials Q_k of a chain");
  eop_args.add(eo, true, true);
  eo->add_option("--k", eop_k, "indices, e.g. -5,-4,0,1,2");

  ChainArgs sp_args;
  int sp_grid = 4000;
  int sp_levels = 6;
  std::string sp_format = "json";
  auto* sp = app.add_subcommand("spectrum", "finite-difference Dirichlet spectrum");
  sp_args.add(sp, false, false);
  sp->add_option("--grid", sp_grid, "interior grid points");
  sp->add_option("--levels", sp_levels, "number of eigenvalues");
  sp->add_option("--format", sp_format, "json or csv");

  ChainArgs or_args;
  std::string or_k;
  int or_order = 256;
  auto* orth = app.add_subcommand("orthogonality", "Gram matrix of Q_k under the chain measure");
  or_args.add(orth, true, true);
  orth->add_option("--k", or_k, "indices, e.g. -5,-4,0,1,2,3");
  orth->add_option("--order", or_order, "Gauss-Legendre order");

  auto* sc = app.add_subcommand("selfcheck", "run the identity and oracle suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pj->parsed()) return cmd_pj(out, pj_N, pj_M, pj_n, pj_lambda);
    if (reg->parsed()) return cmd_regularity(out, reg_args);
    if (ext->parsed()) return cmd_extend(out, ext_args, ext_plot, ext_samples, ext_margin);
    if (plt->parsed()) {
      return cmd_plot(out, plot_args, plot_sweep, plot_from, plot_to, plot_sweep_samples, plot_samples, plot_margin);
    }
    if (eo->parsed()) return cmd_eop(out, eop_args, eop_k);
    if (sp->parsed()) return cmd_spectrum(out, sp_args, sp_grid, sp_levels, sp_format);
    if (orth->parsed()) return cmd_orthogonality(out, or_args, or_k, or_order);
    if (sc->parsed()) return cmd_selfcheck(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace pjx::cli

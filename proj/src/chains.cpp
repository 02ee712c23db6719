#include "pjx/chains.hpp"

#include <algorithm>
#include <sstream>

#include "pjx/errors.hpp"
#include "pjx/parajacobi.hpp"
#include "pjx/serialize.hpp"

namespace pjx {

namespace {

// Lower endpoints: missing means -inf. Upper endpoints: missing means +inf.
bool lo_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return static_cast<bool>(b);
  return b && *a < *b;
}

bool hi_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return false;
  return !b || *a < *b;
}

bool nonempty(const Interval& i) { return !i.lo || !i.hi || *i.lo < *i.hi; }

// lo < hi with the usual reading of missing endpoints.
bool starts_before_end(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  return !lo || !hi || *lo < *hi;
}

std::string endpoint(const std::optional<Rational>& v, const char* inf) { return v ? v->str() : inf; }

bool even(int v) { return v % 2 == 0; }

// One-step table; odd steps >= 3 share it.
IntervalSet odd_table(int N, int M, int n) {
  const Rational ls = coeff_lambda_star(N, M, n);
  const bool me = even(M);
  const bool de = even(n - N);
  if (me && de) return IntervalSet::between(0, ls);
  if (me) return IntervalSet::below(-ls).unite(IntervalSet::above(0));
  if (de) return IntervalSet::below(0).unite(IntervalSet::above(ls));
  return IntervalSet::between(-ls, 0);
}

IntervalSet even_table(int N, int M, int n) {
  const Rational ls = coeff_lambda_star(N, M, n);
  const bool me = even(M);
  const bool de = even(n - N);
  if (me && de) return IntervalSet::below(0).unite(IntervalSet::above(ls));
  if (me) return IntervalSet::between(-ls, 0);
  if (de) return IntervalSet::between(0, ls);
  return IntervalSet::below(-ls).unite(IntervalSet::above(0));
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& i) { return !nonempty(i); });
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return lo_less(a.lo, b.lo); });
  for (auto& p : parts) {
    if (!parts_.empty() && starts_before_end(p.lo, parts_.back().hi)) {
      if (hi_less(parts_.back().hi, p.hi)) parts_.back().hi = p.hi;
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

IntervalSet IntervalSet::all() { return IntervalSet({Interval{}}); }
IntervalSet IntervalSet::below(const Rational& hi) { return IntervalSet({Interval{std::nullopt, hi}}); }
IntervalSet IntervalSet::above(const Rational& lo) { return IntervalSet({Interval{lo, std::nullopt}}); }
IntervalSet IntervalSet::between(const Rational& lo, const Rational& hi) { return IntervalSet({Interval{lo, hi}}); }

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  std::vector<Interval> out;
  for (const auto& a : parts_) {
    for (const auto& b : o.parts_) {
      Interval c{lo_less(a.lo, b.lo) ? b.lo : a.lo, hi_less(a.hi, b.hi) ? a.hi : b.hi};
      out.push_back(std::move(c));
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> out = parts_;
  out.insert(out.end(), o.parts_.begin(), o.parts_.end());
  return IntervalSet(std::move(out));
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " U ";
    os << '(' << endpoint(parts_[i].lo, "-inf") << ", " << endpoint(parts_[i].hi, "+inf") << ')';
  }
  return os.str();
}

void to_json(nlohmann::json& j, const Interval& i) {
  j = nlohmann::json{{"lo", i.lo ? nlohmann::json(*i.lo) : nlohmann::json("-inf")},
                     {"hi", i.hi ? nlohmann::json(*i.hi) : nlohmann::json("+inf")}};
}

void to_json(nlohmann::json& j, const IntervalSet& s) {
  j = nlohmann::json::array();
  for (const auto& i : s.components()) j.push_back(i);
}

std::vector<int> ChainSpec::degrees() const {
  std::vector<int> out;
  for (const auto& s : steps) out.push_back(s.n);
  return out;
}

std::vector<Rational> ChainSpec::lambdas() const {
  std::vector<Rational> out;
  for (const auto& s : steps) out.push_back(s.lambda);
  return out;
}

IntervalSet one_step_interval(int N, int M, int n) {
  check_window(N, M, n);
  return odd_table(N, M, n);
}

IntervalSet step_interval(int step, int N, int M, int n) {
  if (step < 1) fail(ErrorCode::BadIndex, "step index must be >= 1");
  check_window(N, M, n);
  return even(step) ? even_table(N, M, n) : odd_table(N, M, n);
}

std::pair<IntervalSet, IntervalSet> two_step_table(int N, int M, int n1, int n2) {
  check_window(N, M, n1);
  check_window(N, M, n2);
  const Rational l1 = coeff_lambda_star(N, M, n1);
  const Rational l2 = coeff_lambda_star(N, M, n2);
  const IntervalSet zero_to_l1 = IntervalSet::between(0, l1);
  const IntervalSet zero_to_l2 = IntervalSet::between(0, l2);
  const IntervalSet minus_l1_to_zero = IntervalSet::between(-l1, 0);
  const IntervalSet minus_l2_to_zero = IntervalSet::between(-l2, 0);
  const IntervalSet l1_outer_neg = IntervalSet::below(-l1).unite(IntervalSet::above(0));
  const IntervalSet l1_outer_pos = IntervalSet::below(0).unite(IntervalSet::above(l1));
  const IntervalSet l2_outer_neg = IntervalSet::below(-l2).unite(IntervalSet::above(0));
  const IntervalSet l2_outer_pos = IntervalSet::below(0).unite(IntervalSet::above(l2));

  const int key = (even(M) ? 0 : 4) + (even(n1 - N) ? 0 : 2) + (even(n2 - N) ? 0 : 1);
  switch (key) {
    case 0: return {zero_to_l1, l2_outer_pos};
    case 1: return {zero_to_l1, minus_l2_to_zero};
    case 2: return {l1_outer_neg, l2_outer_pos};
    case 3: return {l1_outer_neg, minus_l2_to_zero};
    case 4: return {l1_outer_pos, zero_to_l2};
    case 5: return {l1_outer_pos, l2_outer_neg};
    case 6: return {minus_l1_to_zero, zero_to_l2};
    default: return {minus_l1_to_zero, l2_outer_neg};
  }
}

bool ChainReport::regular() const {
  if (!ordering_ok || !window_ok || !confinement_ok) return false;
  return std::all_of(steps.begin(), steps.end(), [](const StepReport& s) { return s.in_interval; });
}

ChainReport validate_chain(const ChainSpec& spec) {
  ChainReport r;
  const int m = spec.m();
  r.ordering_ok = true;
  for (int i = 1; i < m; ++i) {
    if (spec.steps[i].n >= spec.steps[i - 1].n) {
      r.ordering_ok = false;
      r.violations.push_back("ordering: n" + std::to_string(i + 1) + " = " + std::to_string(spec.steps[i].n) +
                             " must be < n" + std::to_string(i) + " = " + std::to_string(spec.steps[i - 1].n));
    }
  }
  r.confinement_ok = spec.N >= m + 1 && spec.M >= m + 1;
  if (!r.confinement_ok) {
    r.violations.push_back("confinement: need N, M >= " + std::to_string(m + 1));
  }
  r.window_ok = true;
  for (int i = 0; i < m; ++i) {
    StepReport s;
    s.n = spec.steps[i].n;
    s.lambda = spec.steps[i].lambda;
    s.in_window = in_window(spec.N, spec.M, s.n);
    if (s.in_window) {
      s.interval = step_interval(i + 1, spec.N, spec.M, s.n);
      s.in_interval = s.interval->contains(s.lambda);
      if (!s.in_interval) {
        r.violations.push_back("step " + std::to_string(i + 1) + ": lambda = " + s.lambda.str() + " not in " +
                               s.interval->str());
      }
    } else {
      r.window_ok = false;
      r.violations.push_back("step " + std::to_string(i + 1) + ": n = " + std::to_string(s.n) +
                             " outside [max(N,M), N+M)");
    }
    r.steps.push_back(std::move(s));
  }
  return r;
}

void to_json(nlohmann::json& j, const ChainReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    nlohmann::json js{{"n", s.n}, {"lambda", s.lambda}, {"in_window", s.in_window}, {"in_interval", s.in_interval}};
    js["interval"] = s.interval ? nlohmann::json(*s.interval) : nlohmann::json(nullptr);
    steps.push_back(std::move(js));
  }
  j = nlohmann::json{{"steps", std::move(steps)},
                     {"ordering_ok", r.ordering_ok},
                     {"window_ok", r.window_ok},
                     {"confinement_ok", r.confinement_ok},
                     {"regular", r.regular()},
                     {"violations", r.violations}};
}

void to_json(nlohmann::json& j, const ChainSpec& s) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& st : s.steps) steps.push_back({{"n", st.n}, {"lambda", st.lambda}});
  j = nlohmann::json{{"N", s.N}, {"M", s.M}, {"steps", std::move(steps)}};
}

}  // namespace pjx

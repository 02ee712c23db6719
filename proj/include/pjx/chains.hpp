#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pjx/rational.hpp"

namespace pjx {

/// Open interval over the extended rational line; an empty optional is an
/// infinite endpoint.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool contains(const Rational& x) const { return (!lo || *lo < x) && (!hi || x < *hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint open intervals, kept sorted.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Drops empty components, sorts and merges overlapping ones. Components that
  /// only touch at an excluded endpoint stay separate.
  explicit IntervalSet(std::vector<Interval> parts);

  static IntervalSet all();
  static IntervalSet below(const Rational& hi);
  static IntervalSet above(const Rational& lo);
  static IntervalSet between(const Rational& lo, const Rational& hi);

  bool contains(const Rational& x) const;
  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& components() const { return parts_; }

  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet unite(const IntervalSet& o) const;

  std::string str() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

void to_json(nlohmann::json& j, const Interval& i);
void to_json(nlohmann::json& j, const IntervalSet& s);

struct ChainStep {
  int n = 0;
  Rational lambda;
};

struct ChainSpec {
  int N = 1;
  int M = 1;
  std::vector<ChainStep> steps;

  int m() const { return static_cast<int>(steps.size()); }
  std::vector<int> degrees() const;
  std::vector<Rational> lambdas() const;
};

/// Admissible lambda for a single seed p_n^{(-N,-M)}, keyed on the parities of
/// M and n - N. WindowViolation outside the window.
IntervalSet one_step_interval(int N, int M, int n);

/// Admissible lambda for the seed added at step `step` (1-based), assuming
/// steps 1..step-1 are regular. Step 1 is one_step_interval; even steps and odd
/// steps >= 3 use their own parity tables.
IntervalSet step_interval(int step, int N, int M, int n);

/// The eight explicit two-step cases keyed on (M, n1 - N, n2 - N) parities.
std::pair<IntervalSet, IntervalSet> two_step_table(int N, int M, int n1, int n2);

struct StepReport {
  int n = 0;
  Rational lambda;
  bool in_window = false;
  std::optional<IntervalSet> interval;
  bool in_interval = false;
};

struct ChainReport {
  bool ordering_ok = false;
  bool window_ok = false;
  bool confinement_ok = false;
  std::vector<StepReport> steps;
  std::vector<std::string> violations;

  bool regular() const;
};

/// Diagnostics only; never throws for malformed chains.
ChainReport validate_chain(const ChainSpec& spec);

void to_json(nlohmann::json& j, const ChainReport& r);
void to_json(nlohmann::json& j, const ChainSpec& s);

}  // namespace pjx

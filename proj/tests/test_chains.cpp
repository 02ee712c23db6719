#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "pjx/chains.hpp"
#include "pjx/parajacobi.hpp"

using namespace pjx;

namespace {

const Rational inf_lo_marker(-1000000);

}  // namespace

TEST_CASE("interval sets normalise") {
  const IntervalSet s({{Rational(2), Rational(3)}, {Rational(0), Rational(1)}, {Rational(1, 2), Rational(3, 2)}});
  REQUIRE(s.components().size() == 2);
  CHECK(s.components()[0] == Interval{Rational(0), Rational(3, 2)});
  CHECK(s.contains(Rational(1)));
  CHECK_FALSE(s.contains(Rational(2)));
  CHECK_FALSE(s.contains(Rational(7, 4)));
  CHECK(IntervalSet::below(Rational(0)).unite(IntervalSet::above(Rational(3))).str() == "(-inf, 0) U (3, +inf)");
  CHECK(IntervalSet::between(Rational(-2), Rational(0)).intersect(IntervalSet::above(Rational(-1))) ==
        IntervalSet::between(Rational(-1), Rational(0)));
  CHECK(IntervalSet::all().contains(inf_lo_marker));
  CHECK(IntervalSet::below(Rational(0)).intersect(IntervalSet::above(Rational(0))).empty());
}

TEST_CASE("one-step intervals") {
  CHECK(one_step_interval(3, 3, 4) == IntervalSet::between(Rational(-2), Rational(0)));
  CHECK(one_step_interval(3, 3, 3) == IntervalSet::below(Rational(0)).unite(IntervalSet::above(Rational(3))));
  CHECK(one_step_interval(4, 4, 4) == IntervalSet::between(Rational(0), coeff_lambda_star(4, 4, 4)));
  const Rational s = coeff_lambda_star(4, 4, 5);
  CHECK(one_step_interval(4, 4, 5) == IntervalSet::below(-s).unite(IntervalSet::above(Rational(0))));
}

TEST_CASE("later-step intervals") {
  CHECK(step_interval(2, 3, 3, 3) == IntervalSet::between(Rational(0), Rational(3)));
  const Rational s = coeff_lambda_star(4, 4, 4);
  CHECK(step_interval(2, 4, 4, 4) == IntervalSet::below(Rational(0)).unite(IntervalSet::above(s)));
  CHECK(step_interval(3, 4, 4, 4) == IntervalSet::between(Rational(0), s));
  CHECK(step_interval(1, 3, 3, 4) == one_step_interval(3, 3, 4));
  CHECK(step_interval(3, 5, 5, 6) == one_step_interval(5, 5, 6));
  CHECK(step_interval(4, 5, 5, 6) == step_interval(2, 5, 5, 6));
}

TEST_CASE("two-step table matches the composed tables in every parity class") {
  std::set<int> classes;
  for (int N = 1; N <= 8; ++N)
    for (int M = 1; M <= 8; ++M)
      for (int n1 = std::max(N, M); n1 < N + M; ++n1)
        for (int n2 = std::max(N, M); n2 < n1; ++n2) {
          const auto [a, b] = two_step_table(N, M, n1, n2);
          CHECK(a == one_step_interval(N, M, n1));
          CHECK(b == step_interval(2, N, M, n2));
          classes.insert((M % 2) * 4 + ((n1 - N) % 2) * 2 + (n2 - N) % 2);
        }
  CHECK(classes.size() == 8);
}

TEST_CASE("validate_chain") {
  const ChainReport ok = validate_chain({3, 3, {{4, Rational(-1)}, {3, Rational(1)}}});
  CHECK(ok.regular());
  CHECK(ok.violations.empty());
  REQUIRE(ok.steps.size() == 2);
  CHECK(*ok.steps[0].interval == IntervalSet::between(Rational(-2), Rational(0)));
  CHECK(*ok.steps[1].interval == IntervalSet::between(Rational(0), Rational(3)));

  const ChainReport order = validate_chain({3, 3, {{3, Rational(-1)}, {4, Rational(1)}}});
  CHECK_FALSE(order.ordering_ok);
  CHECK_FALSE(order.regular());

  const ChainReport outside = validate_chain({3, 3, {{4, Rational(-3)}, {3, Rational(1)}}});
  CHECK(outside.ordering_ok);
  CHECK_FALSE(outside.steps[0].in_interval);
  CHECK(outside.steps[1].in_interval);
  CHECK_FALSE(outside.regular());
  CHECK(sturm_root_count(para_jacobi({3, 3, 4, Rational(-3)}), Rational(-1), Rational(1)) >= 1);

  CHECK_FALSE(validate_chain({3, 3, {{6, Rational(-1)}}}).window_ok);
  CHECK_FALSE(validate_chain({2, 2, {{3, Rational(1)}, {2, Rational(1)}}}).confinement_ok);
}

TEST_CASE("interval endpoints are rejected") {
  for (const Rational& l : {Rational(0), Rational(-2)}) CHECK_FALSE(validate_chain({3, 3, {{4, l}}}).regular());
  for (const Rational& l : {Rational(0), Rational(3)})
    CHECK_FALSE(validate_chain({3, 3, {{4, Rational(-1)}, {3, l}}}).regular());
}

TEST_CASE("json report") {
  const nlohmann::json j = validate_chain({3, 3, {{4, Rational(-1, 2)}, {3, Rational(1)}}});
  CHECK(j["regular"] == true);
  CHECK(j["steps"][0]["interval"][0]["lo"] == "-2");
  CHECK(j["steps"][0]["interval"][0]["hi"] == "0");
  CHECK(j["steps"][0]["lambda"] == "-1/2");
  CHECK(j["steps"][1]["interval"][0]["hi"] == "3");
}

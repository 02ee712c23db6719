#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "pjx/rational.hpp"

namespace pjx {

/// Univariate polynomial in z with exact rational coefficients, stored in
/// ascending degree with no trailing zero. The zero polynomial is empty.
class RatPoly {
 public:
  /// Degree of the zero polynomial (stands in for minus infinity).
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);
  /// Constant polynomial.
  explicit RatPoly(const Rational& c);
  RatPoly(std::initializer_list<Rational> ascending) : RatPoly(std::vector<Rational>(ascending)) {}

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int k);
  /// The identity polynomial z.
  static RatPoly z();

  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of z^k; zero outside the stored range.
  Rational coeff(int k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  std::span<const Rational> coefficients() const { return c_; }

  Rational operator()(const Rational& z) const;

  /// Coefficients rounded to nearest double, ascending.
  std::vector<double> to_doubles() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  RatPoly& operator*=(const Rational& s);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
  friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
  friend RatPoly operator-(RatPoly a);

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// order-th derivative with respect to z.
RatPoly derivative(const RatPoly& p, int order = 1);

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
/// Throws ZeroPolynomial when b is zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// a / b when b divides a exactly; InexactDivision otherwise.
RatPoly exact_quotient(const RatPoly& a, const RatPoly& b);

/// p(-z).
RatPoly reflect(const RatPoly& p);

RatPoly pow(const RatPoly& p, int k);

/// Determinant of the m x m matrix whose (i, j) entry is the i-th derivative
/// of ps[j] (i, j from 0). Empty input gives 1.
RatPoly wronskian(std::span<const RatPoly> ps);

/// Number of distinct real roots in the open interval (a, b), from a Sturm
/// sequence over Q. Requires a < b, p nonzero, p(a) != 0 and p(b) != 0;
/// raises ZeroPolynomial or EndpointRoot otherwise.
int sturm_root_count(const RatPoly& p, const Rational& a, const Rational& b);

}  // namespace pjx

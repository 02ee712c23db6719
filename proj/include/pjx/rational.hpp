#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace pjx {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& num) : q_(num) {}  // NOLINT(google-explicit-constructor)

  /// num/den, canonicalised. Throws ParseError when den == 0.
  Rational(const Integer& num, const Integer& den);

  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "p/q" and decimal strings such as "-1.5" or "2.5e-3"; decimals
  /// are converted exactly, never through binary floating point.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// "p/q", with "/q" omitted when q == 1.
  std::string str() const;

  /// Nearest double (ties to even).
  double to_double() const;

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rational abs(const Rational& x);
Rational pow(const Rational& base, int exponent);

/// (-1)^k for any integer k.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Exact decimal rendering with `digits` significant figures, round-half-even,
/// in the same layout printf("%.17g") uses for doubles.
std::string to_decimal(const Rational& x, int digits = 17);

/// n!; throws NegativeFactorial for n < 0.
Integer factorial(long n);

/// x(x-1)...(x-l+1); 1 when l == 0.
Rational falling_factorial(const Rational& x, int l);

/// Generalised binomial coefficient x(x-1)...(x-k+1)/k! for any rational x.
Rational binomial(const Rational& x, int k);

}  // namespace pjx

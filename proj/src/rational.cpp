#include "pjx/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "pjx/errors.hpp"

namespace pjx {

namespace {

Integer pow10(long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

Rational pow10_signed(long k) { return k >= 0 ? Rational(pow10(k)) : Rational(Integer(1), pow10(-k)); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::ParseError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InexactDivision, "division of a rational by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  if (slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    const Rational r{Integer(std::string(p), 10), Integer(std::string(q), 10)};
    return negative ? -r : r;
  }

  long exponent = 0;
  const auto epos = body.find_first_of("eE");
  std::string_view mantissa = body;
  if (epos != std::string_view::npos) {
    std::string_view ex = body.substr(epos + 1);
    mantissa = body.substr(0, epos);
    bool eneg = false;
    if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
      eneg = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) fail(ErrorCode::ParseError, "malformed exponent in '" + std::string(text) + "'");
    exponent = std::strtol(std::string(ex).c_str(), nullptr, 10);
    if (eneg) exponent = -exponent;
  }
  const auto dot = mantissa.find('.');
  std::string digits;
  long frac_len = 0;
  if (dot == std::string_view::npos) {
    digits = std::string(mantissa);
  } else {
    digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
    frac_len = static_cast<long>(mantissa.size() - dot - 1);
  }
  if (!all_digits(digits)) fail(ErrorCode::ParseError, "malformed number '" + std::string(text) + "'");
  Rational r = Rational(Integer(digits, 10)) * pow10_signed(exponent - frac_len);
  return negative ? -r : r;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; pick the nearer of it and its outward neighbour.
  const double t = q_.get_d();
  if (is_zero()) return 0.0;
  const double away = std::nextafter(t, sign() > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return t;
  const mpq_class dt(t), da(away);
  const mpq_class et = abs(mpq_class(q_ - dt));
  const mpq_class ea = abs(mpq_class(q_ - da));
  const int c = cmp(et, ea);
  if (c < 0) return t;
  if (c > 0) return away;
  // Tie: even mantissa.
  int exp;
  const double mt = std::frexp(t, &exp);
  const auto bits = static_cast<long long>(std::ldexp(mt, 53));
  return (bits % 2 == 0) ? t : away;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational result(1), b = base;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

std::string to_decimal(const Rational& x, int digits) {
  if (x.is_zero()) return "0";
  const Rational a = abs(x);
  long e = static_cast<long>(a.num().get_str().size()) - static_cast<long>(a.den().get_str().size());
  while (a < pow10_signed(e)) --e;
  while (a >= pow10_signed(e + 1)) ++e;

  Rational scaled = a * pow10_signed(digits - 1 - e);
  Integer n = scaled.num() / scaled.den();  // floor, positive
  const Rational frac = scaled - Rational(n);
  const int half = cmp(frac.raw(), mpq_class(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
  if (n == pow10(digits)) {
    n /= 10;
    ++e;
  }
  std::string s = n.get_str();

  std::string out = x.sign() < 0 ? "-" : "";
  if (e < -4 || e >= digits) {
    std::string mant = s.substr(0, 1);
    std::string rest = s.substr(1);
    while (!rest.empty() && rest.back() == '0') rest.pop_back();
    if (!rest.empty()) mant += "." + rest;
    const long ae = e < 0 ? -e : e;
    std::string es = std::to_string(ae);
    if (es.size() < 2) es = "0" + es;
    out += mant + (e < 0 ? "e-" : "e+") + es;
    return out;
  }
  std::string int_part, frac_part;
  if (e >= 0) {
    int_part = s.substr(0, static_cast<std::size_t>(e + 1));
    frac_part = s.substr(static_cast<std::size_t>(e + 1));
  } else {
    int_part = "0";
    frac_part = std::string(static_cast<std::size_t>(-e - 1), '0') + s;
  }
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  out += int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  return out;
}

Integer factorial(long n) {
  if (n < 0) fail(ErrorCode::NegativeFactorial, "factorial of " + std::to_string(n));
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational falling_factorial(const Rational& x, int l) {
  Rational r(1);
  for (int i = 0; i < l; ++i) r *= x - Rational(i);
  return r;
}

Rational binomial(const Rational& x, int k) {
  if (k < 0) return Rational(0);
  return falling_factorial(x, k) / Rational(factorial(k));
}

}  // namespace pjx

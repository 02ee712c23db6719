#include "pjx/poly.hpp"

#include <algorithm>

#include "pjx/determinant.hpp"
#include "pjx/errors.hpp"

namespace pjx {

RatPoly::RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

RatPoly::RatPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(c); }

RatPoly RatPoly::monomial(const Rational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::z() { return monomial(Rational(1), 1); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational RatPoly::operator()(const Rational& z) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<double> RatPoly::to_doubles() const {
  std::vector<double> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_double());
  return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& o) { return *this = *this * o; }

RatPoly& RatPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

RatPoly operator-(RatPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

RatPoly derivative(const RatPoly& p, int order) {
  if (order <= 0) return p;
  const int d = p.degree();
  if (d < order) return {};
  std::vector<Rational> out(static_cast<std::size_t>(d - order + 1));
  for (int k = order; k <= d; ++k) out[static_cast<std::size_t>(k - order)] = p.coeff(k) * falling_factorial(Rational(k), order);
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  const Rational lead = b.leading();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_quotient(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::InexactDivision, "polynomial quotient has a remainder");
  return q;
}

RatPoly reflect(const RatPoly& p) {
  std::vector<Rational> c(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return RatPoly(std::move(c));
}

RatPoly pow(const RatPoly& p, int k) {
  RatPoly r(Rational(1));
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

RatPoly wronskian(std::span<const RatPoly> ps) {
  const std::size_t m = ps.size();
  Grid<RatPoly> a(m, std::vector<RatPoly>(m));
  for (std::size_t j = 0; j < m; ++j) {
    RatPoly d = ps[j];
    for (std::size_t i = 0; i < m; ++i) {
      a[i][j] = d;
      d = derivative(d, 1);
    }
  }
  return bareiss_determinant(std::move(a));
}

}  // namespace pjx

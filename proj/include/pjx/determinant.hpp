#pragma once

#include <utility>
#include <vector>

#include "pjx/poly.hpp"
#include "pjx/rational.hpp"

namespace pjx {

template <class T>
using Grid = std::vector<std::vector<T>>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const RatPoly& p) { return p.is_zero(); }
inline Rational exact_divide(const Rational& a, const Rational& b) { return a / b; }
inline RatPoly exact_divide(const RatPoly& a, const RatPoly& b) { return exact_quotient(a, b); }

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Row swaps are used when a pivot vanishes. The matrix must be square;
/// the empty matrix has determinant one.
template <class T>
T bareiss_determinant(Grid<T> a) {
  const std::size_t n = a.size();
  if (n == 0) return T(Rational(1));
  int sign = 1;
  T previous = T(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a[p][k])) ++p;
      if (p == n) return T();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = exact_divide(num, previous);
      }
    }
    previous = a[k][k];
  }
  T det = a[n - 1][n - 1];
  if (sign < 0) det = T() - det;
  return det;
}

}  // namespace pjx

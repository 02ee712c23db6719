#include <string>
#include <vector>

#include "pjx/errors.hpp"
#include "pjx/poly.hpp"

namespace pjx {

namespace {

int sign_variations(const std::vector<RatPoly>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Scale to a monic-magnitude representative; Sturm signs only depend on the
// sign of the scale, so divide by |leading| to keep coefficients small.
RatPoly normalise(RatPoly p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / abs(p.leading()));
}

}  // namespace

int sturm_root_count(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm count of the zero polynomial");
  if (!(a < b)) fail(ErrorCode::EndpointRoot, "Sturm interval requires a < b");
  if (p(a).is_zero()) fail(ErrorCode::EndpointRoot, "p vanishes at a = " + a.str());
  if (p(b).is_zero()) fail(ErrorCode::EndpointRoot, "p vanishes at b = " + b.str());
  if (p.degree() == 0) return 0;

  std::vector<RatPoly> seq{normalise(p), normalise(derivative(p, 1))};
  while (true) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    if (r.is_zero()) break;
    seq.push_back(normalise(-r));
  }
  return sign_variations(seq, a) - sign_variations(seq, b);
}

}  // namespace pjx

#include "singdef/upoly.hpp"

namespace singdef {

namespace {

Rational power(const Rational& base, long exponent) {
  Rational r = 1;
  for (long i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

Rational resultant(const QPoly& a0, const QPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  QPoly a = a0, b = b0;
  Rational acc = 1;
  while (true) {
    const long m = a.degree(), n = b.degree();
    if (n == 0) return acc * power(b.lc(), m);
    if (m == 0) return acc * power(a.lc(), n);
    QPoly r = a % b;
    if (r.is_zero()) return 0;
    const long k = r.degree();
    if ((m * n) % 2 != 0) acc = -acc;
    acc *= power(b.lc(), m - k);
    a = std::move(b);
    b = std::move(r);
  }
}

QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
  // Newton divided differences.
  std::vector<Rational> coef = ys;
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      const Rational dx = xs[i] - xs[i - j];
      if (is_zero(dx)) throw std::invalid_argument("interpolation nodes must be distinct");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
      if (i == j) break;
    }
  QPoly out;
  for (std::size_t i = n; i-- > 0;) {
    out = out * QPoly{Rational(-xs[i]), Rational(1)};
    out += QPoly::constant(coef[i]);
  }
  return out;
}

}  // namespace singdef

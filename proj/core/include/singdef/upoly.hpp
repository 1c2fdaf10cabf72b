#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "singdef/rational.hpp"

namespace singdef {

namespace upoly_detail {
template <class C>
bool coeff_zero(const C& c) {
  return is_zero(c);
}
}  // namespace upoly_detail

// Dense univariate polynomial over a field-like coefficient type, stored
// low degree first without trailing zeros. The coefficient type needs the
// field operations, construction from int and an `is_zero(c)` overload.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const C& c) { return UPoly(std::vector<C>{c}); }
  static UPoly monomial(const C& c, std::size_t degree) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(C(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // -1 for zero.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& lc() const { return c_.back(); }

  bool operator==(const UPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!upoly_detail::coeff_zero(C(c_[i] - o.c_[i]))) return false;
    return true;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (upoly_detail::coeff_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(UPoly a, const C& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }

  C operator()(const C& x) const {
    C acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> r(c_.size() - 1, C(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(static_cast<int>(i));
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    C inv = C(1) / lc();
    return *this * inv;
  }

  // Quotient and remainder; divisor must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<C> rem = a.c_;
    std::vector<C> quo(a.c_.size() - b.c_.size() + 1, C(0));
    C inv = C(1) / b.lc();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      C q = rem[k + db] * inv;
      quo[k] = q;
      if (upoly_detail::coeff_zero(q)) continue;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * b.c_[j];
    }
    rem.resize(db);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  // Composition p(q).
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + UPoly::constant(c_[i]);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && upoly_detail::coeff_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using QPoly = UPoly<Rational>;

// Monic gcd over a field; gcd(0, 0) = 0.
template <class C>
UPoly<C> gcd(UPoly<C> a, UPoly<C> b) {
  while (!b.is_zero()) {
    UPoly<C> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// Returns (g, s, t) with s a + t b = g = gcd(a, b), g monic.
template <class C>
struct ExtendedGcd {
  UPoly<C> g, s, t;
};

template <class C>
ExtendedGcd<C> extended_gcd(const UPoly<C>& a, const UPoly<C>& b) {
  UPoly<C> r0 = a, r1 = b;
  UPoly<C> s0 = UPoly<C>::constant(C(1)), s1;
  UPoly<C> t0, t1 = UPoly<C>::constant(C(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<C> s2 = s0 - q * s1;
    UPoly<C> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  C inv = C(1) / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// Squarefree factorization (Yun): returns (factor, multiplicity) pairs of
// monic, pairwise coprime, squarefree polynomials. Characteristic zero.
template <class C>
std::vector<std::pair<UPoly<C>, unsigned>> squarefree_decomposition(const UPoly<C>& f) {
  std::vector<std::pair<UPoly<C>, unsigned>> out;
  if (f.degree() < 1) return out;
  UPoly<C> a = f.monic();
  UPoly<C> b = a.derivative();
  UPoly<C> c = gcd(a, b);
  UPoly<C> w = a / c;
  UPoly<C> y = b / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    UPoly<C> z = y - w.derivative();
    UPoly<C> g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = w / g;
    y = z / g;
    ++i;
  }
  return out;
}

// Resultant over Q by the Euclidean recurrence.
Rational resultant(const QPoly& a, const QPoly& b);

// Unique polynomial of degree < n through the n points (xs[i], ys[i]).
QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace singdef

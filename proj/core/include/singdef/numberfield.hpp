#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "singdef/upoly.hpp"

namespace singdef {

// Q(theta) for theta a root of a monic irreducible polynomial over Q of
// degree >= 2. Irreducibility is the caller's responsibility.
class NumberField {
 public:
  explicit NumberField(QPoly minimal_polynomial);

  const QPoly& minimal_polynomial() const { return minpoly_; }
  std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }

 private:
  QPoly minpoly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of Q or of a number field; a null field means a rational number.
// Rationals combine with elements of any field; elements of two different
// fields do not mix.
class Algebraic {
 public:
  Algebraic() = default;
  Algebraic(int value) : rep_(QPoly::constant(Rational(value))) {}
  Algebraic(const Rational& value) : rep_(QPoly::constant(value)) {}
  // rep is reduced modulo the minimal polynomial.
  Algebraic(FieldPtr field, QPoly rep);

  static Algebraic generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const QPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }

  Algebraic operator-() const;
  Algebraic& operator+=(const Algebraic& o);
  Algebraic& operator-=(const Algebraic& o);
  Algebraic& operator*=(const Algebraic& o);
  Algebraic& operator/=(const Algebraic& o);
  friend Algebraic operator+(Algebraic a, const Algebraic& b) { return a += b; }
  friend Algebraic operator-(Algebraic a, const Algebraic& b) { return a -= b; }
  friend Algebraic operator*(Algebraic a, const Algebraic& b) { return a *= b; }
  friend Algebraic operator/(Algebraic a, const Algebraic& b) { return a /= b; }
  bool operator==(const Algebraic& o) const;

  // Integer power; negative exponents invert. Requires nonzero for e < 0.
  Algebraic pow(long e) const;
  Algebraic inverse() const;

  std::string to_string() const;

 private:
  static FieldPtr common_field(const Algebraic& a, const Algebraic& b);

  FieldPtr field_;
  QPoly rep_;
};

inline bool is_zero(const Algebraic& a) { return a.is_zero(); }

using KPoly = UPoly<Algebraic>;

// Monic irreducible factors over the field (null = Q) with multiplicities.
std::vector<std::pair<KPoly, unsigned>> factor_over(const KPoly& f, const FieldPtr& field);

// L = K(xi) for a root xi of the monic irreducible phi in K[T], deg phi >= 2.
struct FieldExtension {
  FieldPtr field;
  // Image of the generator of K in L (unused when K = Q).
  Algebraic base_generator;
  Algebraic root;
};

FieldExtension extend_field(const FieldPtr& base, const KPoly& phi);

// Rewrites an element of `base` inside the extension.
Algebraic embed(const Algebraic& a, const FieldExtension& ext);

// Coefficients of f lifted to rationals when all are rational.
KPoly to_kpoly(const QPoly& f);

}  // namespace singdef

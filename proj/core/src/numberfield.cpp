#include "singdef/numberfield.hpp"

#include <stdexcept>

#include "singdef/errors.hpp"
#include "singdef/qfactor.hpp"

namespace singdef {

NumberField::NumberField(QPoly minimal_polynomial) : minpoly_(std::move(minimal_polynomial)) {
  if (minpoly_.degree() < 2 || minpoly_.lc() != 1)
    throw std::invalid_argument("minimal polynomial must be monic of degree >= 2");
}

Algebraic::Algebraic(FieldPtr field, QPoly rep) : field_(std::move(field)), rep_(std::move(rep)) {
  if (field_) rep_ = rep_ % field_->minimal_polynomial();
}

Algebraic Algebraic::generator(const FieldPtr& field) {
  return Algebraic(field, QPoly::x());
}

FieldPtr Algebraic::common_field(const Algebraic& a, const Algebraic& b) {
  if (!a.field_) return b.field_;
  if (!b.field_ || a.field_ == b.field_) return a.field_;
  if (a.field_->minimal_polynomial() == b.field_->minimal_polynomial()) return a.field_;
  throw std::logic_error("arithmetic across different number fields");
}

Algebraic Algebraic::operator-() const { return Algebraic(field_, -rep_); }

Algebraic& Algebraic::operator+=(const Algebraic& o) {
  field_ = common_field(*this, o);
  rep_ += o.rep_;
  return *this;
}

Algebraic& Algebraic::operator-=(const Algebraic& o) {
  field_ = common_field(*this, o);
  rep_ -= o.rep_;
  return *this;
}

Algebraic& Algebraic::operator*=(const Algebraic& o) {
  field_ = common_field(*this, o);
  rep_ = rep_ * o.rep_;
  if (field_) rep_ = rep_ % field_->minimal_polynomial();
  return *this;
}

Algebraic& Algebraic::operator/=(const Algebraic& o) { return *this *= o.inverse(); }

bool Algebraic::operator==(const Algebraic& o) const { return (*this - o).is_zero(); }

Algebraic Algebraic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Algebraic(field_, QPoly::constant(1 / rep_.coeff(0)));
  auto eg = extended_gcd(rep_, field_->minimal_polynomial());
  return Algebraic(field_, eg.s);
}

Algebraic Algebraic::pow(long e) const {
  Algebraic base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Algebraic r(field_, QPoly::constant(1));
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

std::string Algebraic::to_string() const {
  if (rep_.is_zero()) return "0";
  std::string out;
  for (std::size_t i = rep_.coeffs().size(); i-- > 0;) {
    const Rational& c = rep_.coeffs()[i];
    if (sgn(c) == 0) continue;
    std::string mag = singdef::to_string(abs(c));
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    if (i == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

KPoly to_kpoly(const QPoly& f) {
  std::vector<Algebraic> c;
  for (const auto& x : f.coeffs()) c.emplace_back(x);
  return KPoly(std::move(c));
}

namespace {

// Norm over Q of phi(T - s*theta), a monic polynomial of degree
// [K:Q] * deg(phi), recovered by interpolation from resultants.
QPoly shifted_norm(const KPoly& phi, const FieldPtr& field, long s) {
  const QPoly& m = field->minimal_polynomial();
  const std::size_t total = field->degree() * static_cast<std::size_t>(phi.degree());
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= total; ++k) {
    const Rational t(static_cast<long>(k));
    // psi(theta) = sum_i c_i(theta) * (t - s*theta)^i
    const QPoly lin{t, Rational(-s)};
    QPoly psi, power = QPoly::constant(1);
    for (const auto& c : phi.coeffs()) {
      psi += (c.rep() * power) % m;
      power = (power * lin) % m;
    }
    xs.push_back(t);
    ys.push_back(resultant(m, psi % m));
  }
  return interpolate(xs, ys);
}

bool squarefree(const QPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

long shift_value(int attempt) {
  // 0, 1, -1, 2, -2, ...
  return attempt % 2 ? (attempt + 1) / 2 : -(attempt / 2);
}

constexpr int kShiftAttempts = 40;

std::vector<KPoly> split_squarefree(const KPoly& phi, const FieldPtr& field) {
  const Algebraic theta = Algebraic::generator(field);
  for (int attempt = 0; attempt < kShiftAttempts; ++attempt) {
    const long s = shift_value(attempt);
    QPoly norm = shifted_norm(phi, field, s);
    if (!squarefree(norm)) continue;
    auto parts = factor_rational(norm);
    if (parts.size() == 1) return {phi};
    std::vector<KPoly> out;
    const KPoly shift{theta * Algebraic(Rational(s)), Algebraic(1)};  // T + s*theta
    for (const auto& [n, mult] : parts) {
      KPoly g = gcd(phi, to_kpoly(n).compose(shift));
      if (g.degree() > 0) out.push_back(g);
    }
    return out;
  }
  throw ResourceLimitError("no squarefree norm found for factorization over a number field");
}

}  // namespace

std::vector<std::pair<KPoly, unsigned>> factor_over(const KPoly& f, const FieldPtr& field) {
  std::vector<std::pair<KPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  if (!field) {
    QPoly q;
    std::vector<Rational> c;
    for (const auto& a : f.coeffs()) {
      if (!a.is_rational()) throw std::logic_error("coefficient outside Q");
      c.push_back(a.rep().coeff(0));
    }
    for (const auto& [p, mult] : factor_rational(QPoly(std::move(c))))
      out.emplace_back(to_kpoly(p), mult);
    return out;
  }
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    if (part.degree() == 1) {
      out.emplace_back(part, mult);
      continue;
    }
    for (auto& g : split_squarefree(part, field)) out.emplace_back(std::move(g), mult);
  }
  return out;
}

FieldExtension extend_field(const FieldPtr& base, const KPoly& phi) {
  if (phi.degree() < 2) throw std::invalid_argument("extension needs degree >= 2");
  const KPoly monic = phi.monic();
  if (!base) {
    std::vector<Rational> c;
    for (const auto& a : monic.coeffs()) c.push_back(a.rep().coeff(0));
    auto field = std::make_shared<const NumberField>(QPoly(std::move(c)));
    return {field, Algebraic(), Algebraic::generator(field)};
  }
  for (int attempt = 0; attempt < kShiftAttempts; ++attempt) {
    const long s = shift_value(attempt);
    QPoly norm = shifted_norm(monic, base, s);
    if (!squarefree(norm)) continue;
    auto field = std::make_shared<const NumberField>(norm);
    const Algebraic gamma = Algebraic::generator(field);
    // theta_L is the common root of m(Y) and phi evaluated at gamma - s*Y
    // with theta replaced by Y.
    const KPoly lin{gamma, Algebraic(Rational(-s))};
    KPoly psi, power = KPoly::constant(Algebraic(1));
    for (const auto& c : monic.coeffs()) {
      KPoly cy = to_kpoly(c.rep());
      // Rational-coefficient polynomials must live in L for the gcd below.
      psi += cy * power;
      power = power * lin;
    }
    KPoly g = gcd(to_kpoly(base->minimal_polynomial()), psi);
    if (g.degree() != 1) continue;
    Algebraic theta_l = -g.coeff(0);
    theta_l = Algebraic(field, theta_l.rep());
    Algebraic root = gamma - Algebraic(Rational(s)) * theta_l;
    return {field, theta_l, root};
  }
  throw ResourceLimitError("no primitive element found for field extension");
}

Algebraic embed(const Algebraic& a, const FieldExtension& ext) {
  if (!a.field()) return Algebraic(ext.field, a.rep());
  Algebraic acc(ext.field, QPoly());
  const auto& c = a.rep().coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * ext.base_generator + Algebraic(c[i]);
  return acc;
}

}  // namespace singdef

#include "singdef/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "singdef/errors.hpp"
#include "singdef/upoly.hpp"

namespace singdef {

// ---------------------------------------------------------------------------
// Ring

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || names_.size() > kMaxVariables)
    throw std::invalid_argument("ring must have between 1 and " + std::to_string(kMaxVariables) +
                                " variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i]))
      throw std::invalid_argument("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
  }
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVariables) throw std::invalid_argument("too many variables");
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (auto e : exponents) set(i++, e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (i >= size_) throw std::out_of_range("monomial variable index");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < size_; ++i) out.exps_[i] -= divisor.exps_[i];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.size_; ++i) out.exps_[i] += b.exps_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) out.set(i, std::max(a.exps_[i], b.exps_[i]));
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < size_; ++i) h = (h ^ exps_[i]) * 1099511628211ull;
  return h;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.degree() != b.degree()) {
    const bool a_higher = a.degree() > b.degree();
    if (order == MonomialOrder::GlobalDegRevLex) return a_higher ? 1 : -1;
    return a_higher ? -1 : 1;
  }
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

bool global_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return compare(a.first, b.first, MonomialOrder::GlobalDegRevLex) > 0;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), Monomial(0), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->size();
  if (index >= n) throw std::out_of_range("variable index out of range");
  return monomial(std::move(ring), Monomial::variable(n, index), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ring));
  Monomial full = m;
  if (m.size() == 0) full = Monomial(p.nvars());
  if (full.size() != p.nvars()) throw std::invalid_argument("monomial size does not match ring");
  if (!singdef::is_zero(c)) p.terms_.emplace_back(full, c);
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const std::size_t n = ring->size();
  for (auto& t : terms)
    if (t.first.size() != n) throw std::invalid_argument("monomial size does not match ring");
  std::sort(terms.begin(), terms.end(), global_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && singdef::is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && singdef::is_zero(out.back().second)) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatchError("polynomials belong to different rings");
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& [mono, c] : terms_)
    if (mono == m) return c;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

long Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().first.degree());
}

long Polynomial::order() const {
  return terms_.empty() ? -1 : static_cast<long>(terms_.back().first.degree());
}

const Polynomial::Term& Polynomial::leading_term(MonomialOrder order) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  if (order == MonomialOrder::GlobalDegRevLex) return terms_.front();
  // Same tie-break inside a degree, so the local leader heads the lowest block.
  const auto low = terms_.back().first.degree();
  std::size_t i = terms_.size() - 1;
  while (i > 0 && terms_[i - 1].first.degree() == low) --i;
  return terms_[i];
}

std::vector<std::size_t> Polynomial::active_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars(); ++v)
    for (const auto& t : terms_)
      if (t.first[v] != 0) {
        out.push_back(v);
        break;
      }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_ring(rhs);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && global_greater(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || global_greater(*b, *a)) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!singdef::is_zero(c)) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!is_zero(c)) terms.emplace_back(m, std::move(c));
  std::sort(terms.begin(), terms.end(), global_greater);
  return Polynomial(a.ring_, std::move(terms));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (singdef::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / terms_.front().second;
  return *this * inv;
}

// ---------------------------------------------------------------------------
// Structural operations

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.nvars()) throw std::out_of_range("variable index out of range");
  std::vector<Polynomial::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[var_index];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var_index, e - 1);
    terms.emplace_back(d, c * e);
  }
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

LinearChange::LinearChange(RationalMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("linear change must be square");
  if (is_zero(matrix_.determinant()))
    throw std::invalid_argument("linear change must be invertible");
}

LinearChange LinearChange::identity(std::size_t n) {
  return LinearChange(RationalMatrix::identity(n));
}

LinearChange LinearChange::inverse() const { return LinearChange(matrix_.inverse()); }

Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      std::span<const Polynomial> images) {
  if (images.size() != p.nvars())
    throw std::invalid_argument("substitution needs one image per variable");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target)) throw RingMismatchError("substitution image in wrong ring");
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(p.nvars());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (m[i] != 0) term *= power(i, m[i]);
    out += term;
  }
  return out;
}

Polynomial substitute_linear(const Polynomial& p, const LinearChange& change) {
  if (change.size() != p.nvars()) throw std::invalid_argument("linear change dimension mismatch");
  std::vector<Polynomial> images;
  images.reserve(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    Polynomial img(p.ring());
    for (std::size_t j = 0; j < p.nvars(); ++j)
      img += Polynomial::variable(p.ring(), j) * change.matrix()(i, j);
    images.push_back(std::move(img));
  }
  return substitute(p, p.ring(), images);
}

Polynomial homogeneous_part(const Polynomial& p, unsigned degree) {
  std::vector<Polynomial::Term> terms;
  for (const auto& t : p.terms())
    if (t.first.degree() == degree) terms.push_back(t);
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

RationalMatrix hessian_at_origin(const Polynomial& p) {
  const std::size_t n = p.nvars();
  RationalMatrix h(n, n);
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 2) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      h(idx[0], idx[0]) += 2 * c;
    } else {
      h(idx[0], idx[1]) += c;
      h(idx[1], idx[0]) += c;
    }
  }
  return h;
}

std::size_t hessian_rank_at_origin(const Polynomial& p) { return hessian_at_origin(p).rank(); }

std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!same_ring(a.ring(), b.ring())) throw RingMismatchError("polynomials belong to different rings");
  Polynomial rem = a;
  std::vector<Polynomial::Term> quotient;
  const auto& [lead_m, lead_c] = b.terms().front();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.terms().front();
    if (!lead_m.divides(rm)) return std::nullopt;
    Polynomial::Term t{rm.divided_by(lead_m), rc / lead_c};
    rem -= Polynomial::monomial(a.ring(), t.first, t.second) * b;
    quotient.push_back(std::move(t));
  }
  return Polynomial::from_terms(a.ring(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// Bivariate gcd via primitive polynomial remainder sequences over Q[b][a].

namespace {

using RecPoly = std::vector<QPoly>;  // coefficient k multiplies a^k

// Second variable absent: univariate in the first.
constexpr std::size_t kNoVariable = static_cast<std::size_t>(-1);

void trim(RecPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RecPoly to_recursive(const Polynomial& p, std::size_t a, std::size_t b) {
  RecPoly out;
  for (const auto& [m, c] : p.terms()) {
    const std::size_t da = m[a];
    const std::size_t db = b != kNoVariable ? m[b] : 0;
    if (out.size() <= da) out.resize(da + 1);
    out[da] += QPoly::monomial(c, db);
  }
  trim(out);
  return out;
}

Polynomial from_recursive(const RecPoly& r, const RingPtr& ring, std::size_t a, std::size_t b) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t k = 0; k < r.size(); ++k)
    for (std::size_t j = 0; j < r[k].coeffs().size(); ++j) {
      if (is_zero(r[k].coeffs()[j])) continue;
      Monomial m(ring->size());
      m.set(a, static_cast<std::uint32_t>(k));
      if (b != kNoVariable) m.set(b, static_cast<std::uint32_t>(j));
      terms.emplace_back(m, r[k].coeffs()[j]);
    }
  return Polynomial::from_terms(ring, std::move(terms));
}

QPoly content(const RecPoly& p) {
  QPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

RecPoly divide_by(const RecPoly& p, const QPoly& c) {
  RecPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x / c);
  return out;
}

RecPoly primitive_part(const RecPoly& p) { return p.empty() ? p : divide_by(p, content(p)); }

// Pseudo-remainder of a by b in the main variable.
RecPoly pseudo_remainder(RecPoly a, const RecPoly& b) {
  const QPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const QPoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

RecPoly recursive_gcd(RecPoly a, RecPoly b) {
  if (a.empty()) return b.empty() ? b : primitive_part(b);
  if (b.empty()) return primitive_part(a);
  QPoly c = gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty() && b.size() > 1) {
    RecPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  RecPoly g = b.empty() ? a : RecPoly{QPoly::constant(1)};
  for (auto& x : g) x = x * c;
  return g;
}

}  // namespace

Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatchError("polynomials belong to different rings");
  std::vector<std::size_t> vars = a.active_variables();
  for (auto v : b.active_variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  if (vars.size() > 2) throw std::invalid_argument("gcd supports at most two variables");
  if (a.is_zero() && b.is_zero()) return a;
  if (vars.empty()) return Polynomial::constant(a.ring(), 1);
  const std::size_t main = vars[0];
  const std::size_t second = vars.size() > 1 ? vars[1] : kNoVariable;
  RecPoly g = recursive_gcd(to_recursive(a, main, second), to_recursive(b, main, second));
  return from_recursive(g, a.ring(), main, second).monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  const auto vars = p.active_variables();
  if (vars.size() > 2) throw std::invalid_argument("squarefree part supports at most two variables");
  Polynomial g = p;
  for (auto v : vars) g = bivariate_gcd(g, partial_derivative(p, v));
  auto q = exact_quotient(p, g);
  if (!q) throw std::logic_error("gcd does not divide its argument");
  return q->monic();
}

}  // namespace singdef

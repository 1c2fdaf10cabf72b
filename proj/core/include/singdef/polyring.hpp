#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "singdef/matrix.hpp"
#include "singdef/rational.hpp"

namespace singdef {

inline constexpr std::size_t kMaxVariables = 8;

/// Variable-count and variable-name context shared by every polynomial of
/// one ring. Names are distinct identifiers starting with a letter.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  static std::shared_ptr<const Ring> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Ring&) const = default;

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return size_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e);

  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const {
    return size_ == other.size_ && exps_ == other.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint32_t, kMaxVariables> exps_{};
  std::uint64_t degree_ = 0;
  std::uint8_t size_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class MonomialOrder {
  // Lower total degree wins, ties by reverse lexicographic; 1 is largest.
  LocalDegRevLex,
  // Higher total degree wins, ties by reverse lexicographic.
  GlobalDegRevLex,
};

// Positive when a > b in the given order, zero when equal.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

// Exact sparse polynomial. Terms are stored in decreasing GlobalDegRevLex
// order with nonzero coefficients, so equality is structural.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  // Sums duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  // -1 for the zero polynomial.
  long degree() const;
  // Lowest total degree of a term; -1 for the zero polynomial.
  long order() const;
  // Requires a nonzero polynomial.
  const Term& leading_term(MonomialOrder order) const;
  // Indices of variables that occur in some term.
  std::vector<std::size_t> active_variables() const;

  bool operator==(const Polynomial& other) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned exponent) const;
  // Scales so the GlobalDegRevLex leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);

/// Invertible linear change of coordinates x_old = M * x_new.
class LinearChange {
 public:
  // Throws std::invalid_argument when the matrix is not square or singular.
  explicit LinearChange(RationalMatrix matrix);

  static LinearChange identity(std::size_t n);

  const RationalMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.rows(); }
  LinearChange inverse() const;

 private:
  RationalMatrix matrix_;
};

// p(M x): variable i is replaced by sum_j M(i, j) x_j.
Polynomial substitute_linear(const Polynomial& p, const LinearChange& change);

// Replaces variable i of p's ring by images[i], a polynomial in `target`.
Polynomial substitute(const Polynomial& p, const RingPtr& target,
                      std::span<const Polynomial> images);

Polynomial homogeneous_part(const Polynomial& p, unsigned degree);

// Matrix of second partials at the origin (twice the quadratic form).
RationalMatrix hessian_at_origin(const Polynomial& p);
std::size_t hessian_rank_at_origin(const Polynomial& p);

// Exact quotient a / b if b divides a, otherwise nullopt. b nonzero.
std::optional<Polynomial> exact_quotient(const Polynomial& a, const Polynomial& b);

// Greatest common divisor of polynomials with at most two active variables
// in total, normalized to be monic. gcd(0, 0) = 0.
Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b);

// Product of the distinct irreducible factors of p (monic), for p with at
// most two active variables. Throws std::invalid_argument for p = 0.
Polynomial squarefree_part(const Polynomial& p);

}  // namespace singdef

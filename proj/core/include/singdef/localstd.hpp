#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "singdef/ideal.hpp"

namespace singdef {

struct StandardBasisOptions {
  // Critical pairs reduced before giving up with ResourceLimitError.
  std::size_t max_pairs = 100000;
  // Terms touched by normal-form reduction steps, summed over the whole
  // computation. Normal forms along a non-isolated singular locus can need
  // very many steps; this turns such runs into ResourceLimitError.
  std::uint64_t max_term_operations = 50'000'000;
  // Largest truncation degree D tried while the leading ideal still misses
  // a pure power. Colength at least D is then reported as INFINITE.
  std::uint64_t max_cut_degree = 64;
  // When the work budget runs out, a truncated basis of degree at least
  // this, still missing a pure power, is returned as INFINITE instead of
  // throwing.
  std::uint64_t min_infinite_degree = 32;
};

// Standard basis of an ideal of the local ring with respect to
// LocalDegRevLex. Once the leading monomials contain every monomial of
// some degree D, tails are cut at degree D; the elements then still lie
// in the ideal because m^D does.
//
// A nonzero truncation_degree() D means the computation stopped with a
// standard basis of I + m^D whose leading ideal misses a pure power: the
// colength of I is then infinite or at least D.
class StandardBasis {
 public:
  StandardBasis(RingPtr ring, std::vector<Polynomial> elements, std::size_t pairs_reduced);

  const RingPtr& ring() const { return ring_; }
  // One element per minimal leading monomial, with leading coefficient 1.
  const std::vector<Polynomial>& elements() const { return elements_; }
  // Minimal generators of the leading ideal, parallel to elements().
  const std::vector<Monomial>& staircase() const { return staircase_; }
  std::size_t pairs_reduced() const { return pairs_reduced_; }
  std::uint64_t truncation_degree() const { return truncation_degree_; }

 private:
  friend StandardBasis standard_basis(const Ideal&, const StandardBasisOptions&);

  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> staircase_;
  std::size_t pairs_reduced_;
  std::uint64_t truncation_degree_ = 0;
};

// deg(p) - deg(LM(p)) for the local order; p nonzero.
long ecart(const Polynomial& p);

// Mora normal form with ecart-guided reducer choice. The result h
// satisfies u*f - h in (basis) for a unit u, and either h = 0 or LM(h) is
// divisible by no LM of the basis.
Polynomial mora_normal_form(const Polynomial& f, std::span<const Polynomial> basis);

StandardBasis standard_basis(const Ideal& ideal, const StandardBasisOptions& options = {});

// Number of monomials outside the leading ideal, INFINITE when some
// variable has no pure power among the leading monomials or the basis is
// truncated.
Colength colength(const StandardBasis& basis);
Colength colength(const Ideal& ideal, const StandardBasisOptions& options = {});

Colength milnor_number(const Polynomial& f, const StandardBasisOptions& options = {});
Colength tjurina_number(const Polynomial& f, const StandardBasisOptions& options = {});
// f(0) = 0 and the Milnor number is finite.
bool is_isolated(const Polynomial& f, const StandardBasisOptions& options = {});

}  // namespace singdef

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "singdef/polyring.hpp"

namespace singdef {

// Dimension of a local quotient algebra: a count, or INFINITE.
class Colength {
 public:
  static Colength finite(std::uint64_t value) { return Colength(false, value); }
  static Colength infinite() { return Colength(true, 0); }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }
  // Requires is_finite().
  std::uint64_t value() const;

  bool operator==(const Colength&) const = default;

  std::string to_string() const;

 private:
  Colength(bool infinite, std::uint64_t value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  std::uint64_t value_;
};

// Generators of an ideal of the local ring at the origin. Zero generators
// are dropped and exact duplicates pruned; at least one must remain.
class Ideal {
 public:
  explicit Ideal(std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

// (df/dx_1, ..., df/dx_n). Rejects f with a nonzero constant term.
Ideal jacobian_ideal(const Polynomial& f);
// (f) + J(f).
Ideal tjurina_ideal(const Polynomial& f);

}  // namespace singdef

#include "singdef/ideal.hpp"

#include <stdexcept>

#include "singdef/errors.hpp"

namespace singdef {

std::uint64_t Colength::value() const {
  if (infinite_) throw std::logic_error("value() of an infinite colength");
  return value_;
}

std::string Colength::to_string() const {
  return infinite_ ? std::string("infinite") : std::to_string(value_);
}

Ideal::Ideal(std::vector<Polynomial> generators) {
  for (auto& g : generators) {
    if (!ring_) ring_ = g.ring();
    if (!same_ring(ring_, g.ring())) throw RingMismatchError("ideal generators in different rings");
    if (g.is_zero()) continue;
    bool duplicate = false;
    for (const auto& h : generators_)
      if (h == g) duplicate = true;
    if (!duplicate) generators_.push_back(std::move(g));
  }
  if (generators_.empty()) throw std::invalid_argument("ideal needs a nonzero generator");
}

Ideal jacobian_ideal(const Polynomial& f) {
  if (!is_zero(f.constant_term()))
    throw std::invalid_argument("germ must vanish at the origin");
  if (f.is_zero()) throw std::invalid_argument("germ must be nonzero");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(partial_derivative(f, i));
  return Ideal(std::move(gens));
}

Ideal tjurina_ideal(const Polynomial& f) {
  Ideal j = jacobian_ideal(f);
  std::vector<Polynomial> gens{f};
  gens.insert(gens.end(), j.generators().begin(), j.generators().end());
  return Ideal(std::move(gens));
}

}  // namespace singdef

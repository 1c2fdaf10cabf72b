#pragma once

#include <utility>
#include <vector>

#include "singdef/upoly.hpp"

namespace singdef {

// Monic irreducible factors over Q with multiplicities, ordered by degree
// and then coefficients. Constant input gives an empty list. Uses modular
// factorization, Hensel lifting and exhaustive recombination; throws
// ResourceLimitError when too many modular factors would need recombining.
std::vector<std::pair<QPoly, unsigned>> factor_rational(const QPoly& f);

bool is_irreducible_rational(const QPoly& f);

}  // namespace singdef

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "singdef/ideal.hpp"

namespace singdef {

// Brute-force colength by exact linear algebra on degree-truncated
// monomial spaces. Shares no code with the standard-basis engine and is
// meant as its test oracle.

struct OracleOptions {
  unsigned max_degree = 24;
  // Cap on the number of monomials of degree < D (matrix columns).
  std::size_t max_monomials = 120000;
};

struct TruncationResult {
  unsigned degree_bound = 0;
  std::uint64_t quotient_dim = 0;
  bool stabilized = false;
};

// dim_Q O / (I + m^D). Throws ResourceLimitError past the size cap.
std::uint64_t truncated_quotient_dim(const Ideal& ideal, unsigned degree_bound,
                                     const OracleOptions& options = {});

// One entry per D = 1, 2, ... up to the stopping bound.
std::vector<TruncationResult> colength_oracle_trace(const Ideal& ideal,
                                                    const OracleOptions& options = {});

Colength colength_oracle(const Ideal& ideal, const OracleOptions& options = {});

}  // namespace singdef

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "singdef/ideal.hpp"
#include "singdef/localstd.hpp"
#include "singdef/polyring.hpp"

namespace singdef {

enum class AdeFamily { A, D, E, NotDuVal, Smooth };

struct AdeType {
  AdeFamily family = AdeFamily::NotDuVal;
  unsigned k = 0;

  bool is_du_val() const {
    return family == AdeFamily::A || family == AdeFamily::D || family == AdeFamily::E;
  }
  // "A(3)", "D(5)", "E6", "NotDuVal" or "Smooth".
  std::string to_string() const;
  bool operator==(const AdeType&) const = default;
};

enum class CubicPattern { ThreeDistinct, DoublePlusSimple, Triple, Zero };

std::string to_string(CubicPattern p);

// Root multiplicity pattern over C of a binary cubic form (at most two
// active variables). Throws std::invalid_argument unless b is zero or
// homogeneous of degree 3.
CubicPattern binary_cubic_pattern(const Polynomial& b);

struct AdeResult {
  AdeType type;
  Colength milnor = Colength::infinite();
  // Set when the Milnor number contradicts the cubic pattern, which
  // happens on non-generic slices.
  std::optional<std::string> inconsistency;
};

// Recognizes simple singularities by Milnor number, Hessian corank and the
// cubic part on the Hessian kernel. Works in any number of variables: a
// germ g(x, y, z) + w^2 gets the type of g. Requires g(0) = 0.
AdeResult ade_classify(const Polynomial& g, const StandardBasisOptions& options = {});

// Ring (x, y, z) of hyperplane slices.
RingPtr surface_ring();

// Restriction of f (four variables) to w = a x + b y + c z with a, b, c
// drawn from {-bound..bound} \ {0} by a generator seeded with `seed`.
struct Slice {
  Polynomial g;
  // x_old = M x_new; the slice is f(M x) at w_new = 0.
  LinearChange change;
};

Slice generic_hyperplane_slice(const Polynomial& f, std::uint64_t seed, unsigned bound = 3);

struct SliceClassification {
  AdeType verdict;
  // Milnor number of the surface germ named by the verdict.
  Colength surface_milnor = Colength::infinite();
  unsigned slices_tried = 0;
  LinearChange witness_change = LinearChange::identity(4);
  // True when the verdict is the type of g for f ~ g(x, y, z) + w^2,
  // false when it is the type of the generic hyperplane section.
  bool stable_type = false;
  // Type of the generic hyperplane section (minimal Milnor number over
  // the slices tried) and its Milnor number.
  AdeType generic_section;
  Colength generic_milnor = Colength::infinite();
};

// Decides whether the isolated germ f (four variables) is compound Du Val.
// Runs `trials` seeded hyperplane slices; the minimal slice Milnor number
// identifies the generic section. When f itself is a suspension of a Du
// Val singularity its stable type is reported, otherwise the generic
// section's type. Throws InconsistentSliceError when slices disagree after
// retries.
SliceClassification is_cdv(const Polynomial& f, unsigned trials = 3, std::uint64_t seed = 1,
                           const StandardBasisOptions& options = {});

}  // namespace singdef

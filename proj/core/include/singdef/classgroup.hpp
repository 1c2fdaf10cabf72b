#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "singdef/polyring.hpp"
#include "singdef/upoly.hpp"

namespace singdef {

// Exponent pair (i, j) of z^i w^j for a curve germ in variables (z, w).
using LatticePoint = std::pair<unsigned, unsigned>;

struct NewtonEdge {
  // `left` has the smaller z exponent.
  LatticePoint left, right;
  // Primitive step from right to left is (-dz, +dw); branches tangent to
  // the edge satisfy w^dw ~ c z^dz.
  unsigned dz = 0, dw = 0;
  // Coefficient of S^k is that of the lattice point right + k(-dz, dw), so
  // the edge terms equal z^i w^j * phi(w^dw / z^dz) at the right vertex.
  QPoly edge_polynomial;
};

struct NewtonPolygon {
  // Vertices of the compact boundary ordered by increasing z exponent.
  std::vector<LatticePoint> vertices;
  // Edges between consecutive vertices, steepest first.
  std::vector<NewtonEdge> edges;
};

// Requires a nonzero polynomial in a two-variable ring with g(0) = 0.
NewtonPolygon newton_polygon(const Polynomial& g);

struct BranchOptions {
  // Largest absolute degree of a number field adjoined during the recursion.
  std::size_t max_tower_degree = 16;
  std::size_t max_depth = 32;
};

struct BranchCount {
  unsigned r = 0;
  std::size_t tower_degree_used = 1;
  std::size_t depth_used = 0;
};

// Number of analytic branches over C of the reduced plane-curve germ g at
// the origin. Throws std::invalid_argument for non-reduced or unsuitable
// input and SigmaUnavailableError when a tower or depth bound is exceeded.
BranchCount count_branches(const Polynomial& g, const BranchOptions& options = {});

// For f = q(x, y) - g(z, w) with q a nondegenerate binary quadratic form
// and no mixed terms (either variable pair may carry q), returns g in
// curve_ring(). Requires a four-variable ring.
std::optional<Polynomial> detect_ca_form(const Polynomial& f);

enum class SigmaProvenance { UserSupplied, CAFormComputed };

std::string to_string(SigmaProvenance p);

struct SigmaResult {
  unsigned sigma = 0;
  SigmaProvenance provenance = SigmaProvenance::UserSupplied;
  std::optional<BranchCount> branches;
};

// user_sigma wins; otherwise an explicit residual germ (ca_form, in two
// variables) or one detected from f is branch-counted. Throws
// SigmaUnavailableError when neither applies.
SigmaResult sigma(const Polynomial& f, std::optional<unsigned> user_sigma,
                  const std::optional<Polynomial>& ca_form = std::nullopt,
                  const BranchOptions& options = {});

}  // namespace singdef

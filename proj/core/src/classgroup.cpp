#include "singdef/classgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"
#include "singdef/numberfield.hpp"

namespace singdef {

namespace {

// Curve germ over a number field: (z exponent, w exponent) -> coefficient.
using CurveTerms = std::map<LatticePoint, Algebraic>;

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  const long ax = static_cast<long>(a.first) - o.first, ay = static_cast<long>(a.second) - o.second;
  const long bx = static_cast<long>(b.first) - o.first, by = static_cast<long>(b.second) - o.second;
  return ax * by - ay * bx;
}

// Vertices of the compact part of the Newton boundary, left to right.
std::vector<LatticePoint> hull_vertices(const std::vector<LatticePoint>& support) {
  std::map<unsigned, unsigned> lowest;
  for (const auto& [i, j] : support) {
    auto [it, inserted] = lowest.try_emplace(i, j);
    if (!inserted) it->second = std::min(it->second, j);
  }
  unsigned jmin = lowest.begin()->second, iend = lowest.begin()->first;
  for (const auto& [i, j] : lowest)
    if (j < jmin) {
      jmin = j;
      iend = i;
    }
  std::vector<LatticePoint> hull;
  for (const auto& [i, j] : lowest) {
    if (i > iend) break;
    const LatticePoint p{i, j};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

struct EdgeShape {
  LatticePoint left, right;
  unsigned dz, dw, steps;
};

std::vector<EdgeShape> edge_shapes(const std::vector<LatticePoint>& vertices) {
  std::vector<EdgeShape> out;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    const auto& l = vertices[k];
    const auto& r = vertices[k + 1];
    const unsigned di = r.first - l.first, dj = l.second - r.second;
    const unsigned g = std::gcd(di, dj);
    out.push_back({l, r, di / g, dj / g, g});
  }
  return out;
}

Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

class BranchCounter {
 public:
  explicit BranchCounter(const BranchOptions& options) : options_(options) {}

  unsigned count(CurveTerms f, const FieldPtr& field, std::size_t depth) {
    if (depth > options_.max_depth)
      throw SigmaUnavailableError("sigma undecided: branch recursion deeper than " +
                                  std::to_string(options_.max_depth) + "; supply --sigma");
    stats_.depth_used = std::max(stats_.depth_used, depth);
    unsigned r = 0;
    r += strip_axis(f, true);
    r += strip_axis(f, false);
    if (f.count({0, 0})) return r;

    std::vector<LatticePoint> support;
    for (const auto& [p, c] : f) support.push_back(p);
    for (const auto& e : edge_shapes(hull_vertices(support))) {
      std::vector<Algebraic> phi(e.steps + 1, Algebraic(0));
      for (unsigned k = 0; k <= e.steps; ++k) {
        auto it = f.find({e.right.first - k * e.dz, e.right.second + k * e.dw});
        if (it != f.end()) phi[k] = it->second;
      }
      for (const auto& [psi, mult] : factor_over(KPoly(std::move(phi)), field)) {
        const auto d = static_cast<unsigned>(psi.degree());
        if (mult == 1) {
          // Each simple root starts one smooth branch in the blown-up chart.
          r += d;
          continue;
        }
        if (d == 1) {
          r += count(transform(f, e, -psi.coeff(0)), field, depth + 1);
          continue;
        }
        FieldExtension ext = extend_field(field, psi);
        if (ext.field->degree() > options_.max_tower_degree)
          throw SigmaUnavailableError("sigma undecided: algebraic extension of degree " +
                                      std::to_string(ext.field->degree()) + " exceeds " +
                                      std::to_string(options_.max_tower_degree) +
                                      "; supply --sigma");
        stats_.tower_degree_used = std::max(stats_.tower_degree_used, ext.field->degree());
        CurveTerms lifted;
        for (const auto& [p, c] : f) lifted.emplace(p, embed(c, ext));
        // Conjugate roots continue isomorphic branch sets.
        r += d * count(transform(lifted, e, ext.root), ext.field, depth + 1);
      }
    }
    return r;
  }

  const BranchCount& stats() const { return stats_; }

 private:
  // Divides out a coordinate axis contained in the curve.
  static unsigned strip_axis(CurveTerms& f, bool z_axis) {
    unsigned low = ~0u;
    for (const auto& [p, c] : f) low = std::min(low, z_axis ? p.second : p.first);
    if (low == 0) return 0;
    if (low > 1) throw std::invalid_argument("curve germ is not reduced");
    CurveTerms out;
    for (auto& [p, c] : f)
      out.emplace(z_axis ? LatticePoint{p.first, p.second - 1} : LatticePoint{p.first - 1, p.second},
                  c);
    f = std::move(out);
    return 1;
  }

  // Substitutes z = xi^v Z^dw, w = Z^dz (xi^u + W) with u dw - v dz = 1
  // and divides by the edge's weighted degree. W = 0 becomes a root of the
  // transformed germ of the same multiplicity as xi in the edge polynomial.
  static CurveTerms transform(const CurveTerms& f, const EdgeShape& e, const Algebraic& xi) {
    unsigned u = 1;
    while ((u * e.dw - 1) % e.dz != 0) ++u;
    const unsigned v = (u * e.dw - 1) / e.dz;
    const unsigned level = e.dw * e.right.first + e.dz * e.right.second;
    const Algebraic xu = xi.pow(u), xv = xi.pow(v);
    CurveTerms out;
    for (const auto& [p, c] : f) {
      const auto [i, j] = p;
      const unsigned zexp = e.dw * i + e.dz * j - level;
      const Algebraic base = c * xv.pow(i);
      for (unsigned k = 0; k <= j; ++k) {
        Algebraic term = base * Algebraic(binomial(j, k)) * xu.pow(j - k);
        auto [it, inserted] = out.try_emplace({zexp, k}, Algebraic(0));
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
    return out;
  }

  BranchOptions options_;
  BranchCount stats_;
};

void require_curve(const Polynomial& g) {
  if (g.nvars() != 2) throw std::invalid_argument("curve germ must live in a two-variable ring");
  if (g.is_zero()) throw std::invalid_argument("curve germ must be nonzero");
  if (sgn(g.constant_term()) != 0)
    throw std::invalid_argument("curve germ must vanish at the origin");
}

std::vector<LatticePoint> support_of(const Polynomial& g) {
  std::vector<LatticePoint> out;
  for (const auto& [m, c] : g.terms()) out.emplace_back(m[0], m[1]);
  return out;
}

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& g) {
  require_curve(g);
  NewtonPolygon out;
  out.vertices = hull_vertices(support_of(g));
  for (const auto& e : edge_shapes(out.vertices)) {
    std::vector<Rational> phi(e.steps + 1, Rational(0));
    for (unsigned k = 0; k <= e.steps; ++k)
      phi[k] = g.coefficient(Monomial{e.right.first - k * e.dz, e.right.second + k * e.dw});
    out.edges.push_back({e.left, e.right, e.dz, e.dw, QPoly(std::move(phi))});
  }
  return out;
}

BranchCount count_branches(const Polynomial& g, const BranchOptions& options) {
  require_curve(g);
  const Polynomial reduced = squarefree_part(g);
  const auto cofactor = exact_quotient(g, reduced);
  if (!cofactor || sgn(cofactor->constant_term()) == 0)
    throw std::invalid_argument("curve germ is not reduced");

  CurveTerms terms;
  for (const auto& [m, c] : g.terms()) terms.emplace(LatticePoint{m[0], m[1]}, Algebraic(c));
  BranchCounter counter(options);
  BranchCount result = counter.stats();
  const unsigned r = counter.count(std::move(terms), nullptr, 0);
  result = counter.stats();
  result.r = r;
  if (r == 0 || r > static_cast<unsigned>(g.order()))
    throw std::logic_error("branch count outside [1, order of the germ]");
  return result;
}

std::optional<Polynomial> detect_ca_form(const Polynomial& f) {
  if (f.nvars() != 4) throw std::invalid_argument("cA detection needs four variables");
  if (sgn(f.constant_term()) != 0) return std::nullopt;
  const std::size_t pairs[2][2][2] = {{{0, 1}, {2, 3}}, {{2, 3}, {0, 1}}};
  for (const auto& choice : pairs) {
    const auto& quad = choice[0];
    const auto& curve = choice[1];
    Rational a, b, c;
    std::vector<Polynomial::Term> rest;
    bool ok = true;
    for (const auto& [m, coeff] : f.terms()) {
      const bool in_quad = m[curve[0]] == 0 && m[curve[1]] == 0;
      const bool in_curve = m[quad[0]] == 0 && m[quad[1]] == 0;
      if (in_quad) {
        if (m.degree() != 2) {
          ok = false;
          break;
        }
        (m[quad[0]] == 2 ? a : m[quad[1]] == 2 ? c : b) = coeff;
      } else if (in_curve) {
        Monomial g(2);
        g.set(0, m[curve[0]]);
        g.set(1, m[curve[1]]);
        rest.emplace_back(g, -coeff);
      } else {
        ok = false;
        break;
      }
    }
    if (!ok || rest.empty() || sgn(b * b - 4 * a * c) == 0) continue;
    return Polynomial::from_terms(curve_ring(), std::move(rest));
  }
  return std::nullopt;
}

std::string to_string(SigmaProvenance p) {
  return p == SigmaProvenance::UserSupplied ? "UserSupplied" : "CAFormComputed";
}

SigmaResult sigma(const Polynomial& f, std::optional<unsigned> user_sigma,
                  const std::optional<Polynomial>& ca_form, const BranchOptions& options) {
  if (user_sigma) return {*user_sigma, SigmaProvenance::UserSupplied, std::nullopt};
  std::optional<Polynomial> g = ca_form ? ca_form : detect_ca_form(f);
  if (!g)
    throw SigmaUnavailableError(
        "sigma unavailable: the input is not of the form q(x,y) - g(z,w) with q a nondegenerate "
        "quadratic form; supply --sigma or --ca-form");
  BranchCount branches = count_branches(*g, options);
  return {branches.r - 1, SigmaProvenance::CAFormComputed, branches};
}

}  // namespace singdef

#include "singdef/localstd.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "singdef/errors.hpp"

namespace singdef {

namespace {

using Term = Polynomial::Term;
// Terms in decreasing local order: the leading term comes first and the
// highest total degree last.
using LocalPoly = std::vector<Term>;

constexpr std::uint64_t kNoCut = std::numeric_limits<std::uint64_t>::max();

bool local_greater(const Monomial& a, const Monomial& b) {
  return compare(a, b, MonomialOrder::LocalDegRevLex) > 0;
}

LocalPoly to_local(const Polynomial& p) {
  LocalPoly out = p.terms();
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return local_greater(a.first, b.first); });
  return out;
}

long local_ecart(const LocalPoly& p) {
  return static_cast<long>(p.back().first.degree()) - static_cast<long>(p.front().first.degree());
}

void make_monic(LocalPoly& p) {
  if (p.empty() || p.front().second == 1) return;
  const Rational inv = 1 / p.front().second;
  for (auto& t : p) t.second *= inv;
}

void cut(LocalPoly& p, std::uint64_t bound) {
  if (bound == kNoCut) return;
  while (!p.empty() && p.back().first.degree() >= bound) p.pop_back();
}

// h - c * t * g, where the leading terms cancel by construction. Terms of
// degree >= bound are dropped.
LocalPoly reduce_step(const LocalPoly& h, const LocalPoly& g, std::uint64_t bound) {
  const Rational c = h.front().second / g.front().second;
  const Monomial t = h.front().first.divided_by(g.front().first);
  LocalPoly out;
  out.reserve(h.size() + g.size());
  auto a = h.begin() + 1;
  auto b = g.begin() + 1;
  auto keep = [&](const Monomial& m) { return m.degree() < bound; };
  while (a != h.end() || b != g.end()) {
    if (b == g.end()) {
      if (keep(a->first)) out.push_back(*a);
      ++a;
      continue;
    }
    const Monomial mb = b->first * t;
    if (a == h.end() || local_greater(mb, a->first)) {
      if (keep(mb)) out.emplace_back(mb, -c * b->second);
      ++b;
    } else if (local_greater(a->first, mb)) {
      if (keep(a->first)) out.push_back(*a);
      ++a;
    } else {
      Rational v = a->second - c * b->second;
      if (sgn(v) != 0 && keep(mb)) out.emplace_back(mb, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

// Caps the total number of terms touched by reduction steps.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit) : remaining_(limit) {}
  void charge(std::uint64_t terms) {
    if (terms > remaining_)
      throw ResourceLimitError("standard basis exceeded its reduction work budget");
    remaining_ -= terms;
  }

 private:
  std::uint64_t remaining_;
};

struct Element {
  LocalPoly poly;
  long ecart;
  const Monomial& lm() const { return poly.front().first; }
};

LocalPoly normal_form(LocalPoly h, const std::vector<Element>& basis, std::uint64_t bound,
                      WorkBudget* budget) {
  cut(h, bound);
  std::vector<Element> extra;
  while (!h.empty()) {
    const Monomial lm = h.front().first;
    const Element* best = nullptr;
    bool best_is_extra = false;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].lm().divides(lm) && (!best || basis[i].ecart < best->ecart)) {
        best = &basis[i];
        best_index = i;
      }
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (extra[i].lm().divides(lm) && (!best || extra[i].ecart < best->ecart)) {
        best = &extra[i];
        best_is_extra = true;
        best_index = i;
      }
    if (!best) break;
    const long eh = local_ecart(h);
    if (best->ecart > eh) {
      extra.push_back({h, eh});
      best = best_is_extra ? &extra[best_index] : &basis[best_index];
    }
    if (budget) {
      // Weight by coefficient size: long runs tend to grow coefficients too.
      const auto& lc = h.front().second;
      const std::uint64_t limbs = mpz_size(lc.get_num_mpz_t()) + mpz_size(lc.get_den_mpz_t());
      budget->charge((h.size() + best->poly.size()) * limbs);
    }
    h = reduce_step(h, best->poly, bound);
  }
  return h;
}

struct LocalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return local_greater(a, b); }
};

// Full reduction modulo m^bound: every term divisible by a leading
// monomial is eliminated, which terminates because only finitely many
// monomials have degree < bound. Leaves a polynomial supported on
// standard monomials.
LocalPoly full_reduce(const LocalPoly& h, const std::vector<Element>& basis,
                      std::uint64_t bound, WorkBudget* budget) {
  std::map<Monomial, Rational, LocalGreater> work;
  for (const auto& [m, c] : h)
    if (m.degree() < bound) work.emplace(m, c);
  LocalPoly out;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Monomial& m = node.key();
    const Element* best = nullptr;
    for (const auto& b : basis)
      if (b.lm().divides(m) && (!best || b.poly.size() < best->poly.size())) best = &b;
    if (!best) {
      out.emplace_back(m, std::move(node.mapped()));
      continue;
    }
    if (budget) {
      const auto& c = node.mapped();
      budget->charge(best->poly.size() *
                     (mpz_size(c.get_num_mpz_t()) + mpz_size(c.get_den_mpz_t())));
    }
    const Monomial t = m.divided_by(best->lm());
    const Rational c = node.mapped() / best->poly.front().second;
    for (auto it = best->poly.begin() + 1; it != best->poly.end(); ++it) {
      Monomial mt = it->first * t;
      if (mt.degree() >= bound) break;
      auto [pos, inserted] = work.try_emplace(std::move(mt), 0);
      pos->second -= c * it->second;
      if (sgn(pos->second) == 0) work.erase(pos);
    }
  }
  return out;
}

Polynomial from_local(const RingPtr& ring, LocalPoly p) {
  return Polynomial::from_terms(ring, std::move(p));
}

// Calls visit(m) for each monomial outside the monomial ideal generated by
// `gens`, assuming every variable has a pure power among them. Stops and
// returns false once `limit` monomials were visited.
template <class Visit>
bool for_each_standard_monomial(const std::vector<Monomial>& gens, std::size_t nvars,
                                std::size_t limit, Visit&& visit) {
  std::size_t visited = 0;
  Monomial m(nvars);
  auto divisible = [&](const Monomial& x) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(x); });
  };
  // Depth-first over exponent vectors; raising an exponent of a divisible
  // monomial stays divisible, so each coordinate loop breaks at the first hit.
  auto rec = [&](auto&& self, std::size_t var) -> bool {
    if (var == nvars) {
      if (++visited > limit) return false;
      visit(m);
      return true;
    }
    for (std::uint32_t e = 0;; ++e) {
      m.set(var, e);
      if (divisible(m)) break;
      if (!self(self, var + 1)) return false;
    }
    m.set(var, 0);
    return true;
  };
  return rec(rec, 0);
}

bool has_all_pure_powers(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& g : gens) {
      if (g.degree() == g[v]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Smallest D with every degree-D monomial in the monomial ideal, if the
// standard monomials are few enough to enumerate.
std::optional<std::uint64_t> degree_cut(const std::vector<Monomial>& gens, std::size_t nvars) {
  if (!has_all_pure_powers(gens, nvars)) return std::nullopt;
  std::uint64_t top = 0;
  bool any = false;
  const bool complete = for_each_standard_monomial(gens, nvars, 200000, [&](const Monomial& m) {
    top = std::max(top, m.degree());
    any = true;
  });
  if (!complete) return std::nullopt;
  return any ? top + 1 : 0;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> ms) {
  std::vector<Monomial> out;
  std::sort(ms.begin(), ms.end(),
            [](const Monomial& a, const Monomial& b) { return local_greater(a, b); });
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

struct Pair {
  std::uint64_t degree;
  Monomial lcm;
  std::size_t i, j;
};

struct PairOrder {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    const int c = compare(a.lcm, b.lcm, MonomialOrder::LocalDegRevLex);
    if (c != 0) return c > 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

class Engine {
 public:
  Engine(const Ideal& ideal, const StandardBasisOptions& options, std::uint64_t bound,
         WorkBudget& budget)
      : ring_(ideal.ring()), options_(options), bound_(bound), budget_(budget) {
    for (const auto& g : ideal.generators()) {
      LocalPoly p = to_local(g);
      cut(p, bound_);
      if (!p.empty()) add(std::move(p));
      if (unit_) return;
    }
  }

  StandardBasis run() {
    while (!unit_ && !pairs_.empty()) {
      Pair pair = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      if (pair.degree >= bound_) continue;
      if (++reduced_ > options_.max_pairs)
        throw ResourceLimitError("standard basis exceeded " + std::to_string(options_.max_pairs) +
                                 " critical pairs");
      LocalPoly s = spoly(basis_[pair.i], basis_[pair.j], pair.lcm);
      LocalPoly h = bound_ == kNoCut ? normal_form(std::move(s), basis_, bound_, &budget_)
                                     : full_reduce(s, basis_, bound_, &budget_);
      if (!h.empty()) add(std::move(h));
    }
    return finish();
  }

 private:
  LocalPoly spoly(const Element& a, const Element& b, const Monomial& l) const {
    LocalPoly sa;
    const Monomial ta = l.divided_by(a.lm());
    sa.reserve(a.poly.size());
    for (const auto& [m, c] : a.poly) sa.emplace_back(m * ta, c);
    // sa has leading monomial l and coefficient 1, as does (l / lm(b)) * b.
    return reduce_step(sa, b.poly, bound_);
  }

  void add(LocalPoly p) {
    make_monic(p);
    Element e{std::move(p), 0};
    e.ecart = local_ecart(e.poly);
    const std::size_t k = basis_.size();
    if (e.lm().is_one()) unit_ = true;

    // Chain criterion: drop (i, j) when lm_k | lcm(i, j) and both new
    // lcms differ from it.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      if (e.lm().divides(it->lcm) && lcm(basis_[it->i].lm(), e.lm()) != it->lcm &&
          lcm(basis_[it->j].lm(), e.lm()) != it->lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (basis_[i].lm().coprime(e.lm())) continue;
      Monomial l = lcm(basis_[i].lm(), e.lm());
      if (l.degree() >= bound_) continue;
      pairs_.insert(Pair{l.degree(), l, i, k});
    }
    basis_.push_back(std::move(e));
    update_cut();
    if (bound_ != kNoCut) reduce_tails(basis_.back().lm());
  }

  // Keeps tails on standard monomials once `lm` joined the leading ideal.
  void reduce_tails(const Monomial& lm) {
    for (std::size_t i = 0; i + 1 < basis_.size(); ++i) {
      auto& poly = basis_[i].poly;
      if (std::none_of(poly.begin() + 1, poly.end(),
                       [&](const Term& t) { return lm.divides(t.first); }))
        continue;
      LocalPoly tail = full_reduce(LocalPoly(poly.begin() + 1, poly.end()), basis_, bound_,
                                   &budget_);
      poly.resize(1);
      poly.insert(poly.end(), tail.begin(), tail.end());
      basis_[i].ecart = local_ecart(poly);
    }
  }

  void update_cut() {
    std::vector<Monomial> lms;
    lms.reserve(basis_.size());
    for (const auto& b : basis_) lms.push_back(b.lm());
    auto d = degree_cut(minimal_monomials(std::move(lms)), ring_->size());
    if (!d || *d >= bound_) return;
    bound_ = *d;
    for (auto& b : basis_) {
      // Leading monomials all have degree < bound_ unless redundant.
      if (b.lm().degree() >= bound_) continue;
      cut(b.poly, bound_);
      b.ecart = local_ecart(b.poly);
    }
  }

  StandardBasis finish() const {
    std::vector<Monomial> lms;
    for (const auto& b : basis_) lms.push_back(b.lm());
    const auto minimal = minimal_monomials(lms);
    std::vector<Polynomial> elements;
    for (const auto& m : minimal)
      for (const auto& b : basis_)
        if (b.lm() == m) {
          elements.push_back(from_local(ring_, b.poly));
          break;
        }
    return StandardBasis(ring_, std::move(elements), reduced_);
  }

  RingPtr ring_;
  StandardBasisOptions options_;
  std::vector<Element> basis_;
  std::set<Pair, PairOrder> pairs_;
  std::uint64_t bound_;
  WorkBudget& budget_;
  std::size_t reduced_ = 0;
  bool unit_ = false;
};

}  // namespace

StandardBasis::StandardBasis(RingPtr ring, std::vector<Polynomial> elements,
                             std::size_t pairs_reduced)
    : ring_(std::move(ring)), elements_(std::move(elements)), pairs_reduced_(pairs_reduced) {
  for (const auto& e : elements_) {
    if (!same_ring(e.ring(), ring_)) throw RingMismatchError("standard basis element ring");
    staircase_.push_back(e.leading_term(MonomialOrder::LocalDegRevLex).first);
  }
}

long ecart(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("ecart of the zero polynomial");
  return p.degree() - p.order();
}

Polynomial mora_normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<Element> elems;
  for (const auto& b : basis) {
    if (!same_ring(b.ring(), f.ring())) throw RingMismatchError("normal form operands");
    if (b.is_zero()) continue;
    LocalPoly p = to_local(b);
    const long e = local_ecart(p);
    elems.push_back({std::move(p), e});
  }
  if (f.is_zero()) return f;
  return from_local(f.ring(), normal_form(to_local(f), elems, kNoCut, nullptr));
}

namespace {

// Degree D' such that the pure powers among `gens` force every monomial of
// degree >= D' into the monomial ideal, if all variables have one.
std::optional<std::uint64_t> pure_power_bound(const std::vector<Monomial>& gens,
                                              std::size_t nvars) {
  std::uint64_t sum = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::optional<std::uint64_t> best;
    for (const auto& g : gens)
      if (g.degree() == g[v] && (!best || g[v] < *best)) best = g[v];
    if (!best) return std::nullopt;
    sum += *best == 0 ? 0 : *best - 1;
  }
  return sum + 1;
}

constexpr std::uint64_t kFirstCut = 8;

}  // namespace

StandardBasis standard_basis(const Ideal& ideal, const StandardBasisOptions& options) {
  // Work modulo m^D with growing D. Leading monomials of degree < D agree
  // with those of the ideal itself, so once their pure powers push every
  // monomial of degree >= D into the leading ideal, m^D lies in the ideal
  // and the truncated basis is a basis of the ideal.
  const std::size_t n = ideal.ring()->size();
  WorkBudget budget(options.max_term_operations);
  std::optional<StandardBasis> last;
  std::uint64_t d = std::min<std::uint64_t>(kFirstCut, options.max_cut_degree);
  try {
    for (;;) {
      StandardBasis sb = Engine(ideal, options, d, budget).run();
      const auto needed = pure_power_bound(sb.staircase(), n);
      if (needed && *needed <= d) return sb;
      sb.truncation_degree_ = d;
      last = std::move(sb);
      if (needed)
        d = *needed;  // finite colength; this run is exact
      else if (d >= options.max_cut_degree)
        return std::move(*last);
      else
        d = std::min(2 * d, options.max_cut_degree);
    }
  } catch (const ResourceLimitError&) {
    if (last && last->truncation_degree_ >= options.min_infinite_degree &&
        !pure_power_bound(last->staircase(), n))
      return std::move(*last);
    throw;
  }
}

Colength colength(const StandardBasis& basis) {
  const auto& gens = basis.staircase();
  const std::size_t n = basis.ring()->size();
  if (basis.truncation_degree() != 0 || !has_all_pure_powers(gens, n))
    return Colength::infinite();
  std::uint64_t count = 0;
  for_each_standard_monomial(gens, n, std::numeric_limits<std::size_t>::max(),
                             [&](const Monomial&) { ++count; });
  return Colength::finite(count);
}

Colength colength(const Ideal& ideal, const StandardBasisOptions& options) {
  return colength(standard_basis(ideal, options));
}

Colength milnor_number(const Polynomial& f, const StandardBasisOptions& options) {
  return colength(jacobian_ideal(f), options);
}

Colength tjurina_number(const Polynomial& f, const StandardBasisOptions& options) {
  return colength(tjurina_ideal(f), options);
}

bool is_isolated(const Polynomial& f, const StandardBasisOptions& options) {
  if (f.is_zero() || sgn(f.constant_term()) != 0) return false;
  return milnor_number(f, options).is_finite();
}

}  // namespace singdef

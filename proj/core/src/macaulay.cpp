#include "singdef/macaulay.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "singdef/errors.hpp"

namespace singdef {

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

// All monomials in n variables of degree < bound, lowest degree first.
std::vector<Monomial> monomials_below(std::size_t nvars, unsigned bound, std::size_t cap) {
  std::vector<Monomial> out;
  if (bound == 0) return out;
  std::vector<Monomial> layer{Monomial(nvars)};
  for (unsigned d = 0; d < bound; ++d) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (out.size() > cap)
      throw ResourceLimitError("truncated monomial space exceeds " + std::to_string(cap) +
                               " monomials");
    if (d + 1 == bound) break;
    // Next layer: multiply by x_i with i >= last variable used, so each
    // monomial is produced once.
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      std::size_t last = 0;
      for (std::size_t i = 0; i < nvars; ++i)
        if (m[i] != 0) last = i;
      for (std::size_t i = last; i < nvars; ++i) {
        Monomial n = m;
        n.set(i, m[i] + 1);
        next.push_back(n);
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Incremental row echelon form with normalized (leading 1) pivot rows.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : pivots_(cols) {}

  // Reduces the row; stores it as a new pivot if it survives.
  bool insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    const Rational inv = 1 / row.front().second;
    for (auto& e : row) e.second *= inv;
    const auto col = row.front().first;
    pivots_[col] = std::move(row);
    ++rank_;
    return true;
  }

  bool in_span(SparseRow row) const {
    reduce(row);
    return row.empty();
  }

  std::size_t rank() const { return rank_; }

 private:
  void reduce(SparseRow& row) const {
    std::size_t start = 0;
    while (start < row.size()) {
      const auto& pivot = pivots_[row[start].first];
      if (!pivot) {
        ++start;
        continue;
      }
      const Rational factor = row[start].second;
      SparseRow merged;
      merged.reserve(row.size() + pivot->size());
      merged.insert(merged.end(), row.begin(), row.begin() + static_cast<long>(start));
      auto a = row.begin() + static_cast<long>(start) + 1;
      auto b = pivot->begin() + 1;
      while (a != row.end() || b != pivot->end()) {
        if (b == pivot->end() || (a != row.end() && a->first < b->first)) {
          merged.push_back(std::move(*a++));
        } else if (a == row.end() || b->first < a->first) {
          merged.emplace_back(b->first, -factor * b->second);
          ++b;
        } else {
          Rational v = a->second - factor * b->second;
          if (!is_zero(v)) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
    // Everything before `start` sits on non-pivot columns; keep it.
  }

  std::vector<std::optional<SparseRow>> pivots_;
  std::size_t rank_ = 0;
};

struct TruncatedSystem {
  std::size_t columns = 0;
  std::size_t rank = 0;
  bool pure_powers_eliminated = false;
};

TruncatedSystem build_and_reduce(const Ideal& ideal, unsigned bound, const OracleOptions& options,
                                 bool want_witness) {
  const std::size_t n = ideal.ring()->size();
  const auto monomials = monomials_below(n, bound, options.max_monomials);
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  index.reserve(monomials.size());
  for (std::uint32_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

  // (multiplier degree, generator, multiplier) triples; short rows first.
  struct RowSpec {
    std::uint64_t mult_degree;
    std::size_t generator;
    std::size_t multiplier;
  };
  std::vector<RowSpec> specs;
  const auto& gens = ideal.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto ord = static_cast<std::uint64_t>(gens[g].order());
    for (std::size_t m = 0; m < monomials.size(); ++m)
      if (monomials[m].degree() + ord < bound) specs.push_back({monomials[m].degree(), g, m});
  }
  std::stable_sort(specs.begin(), specs.end(),
                   [](const RowSpec& a, const RowSpec& b) { return a.mult_degree > b.mult_degree; });

  Echelon echelon(monomials.size());
  for (const auto& s : specs) {
    SparseRow row;
    const Monomial& mult = monomials[s.multiplier];
    for (const auto& [m, c] : gens[s.generator].terms()) {
      if (m.degree() + mult.degree() >= bound) continue;
      row.emplace_back(index.at(m * mult), c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    echelon.insert(std::move(row));
  }

  TruncatedSystem out;
  out.columns = monomials.size();
  out.rank = echelon.rank();
  if (want_witness) {
    out.pure_powers_eliminated = true;
    for (std::size_t v = 0; v < n && out.pure_powers_eliminated; ++v) {
      bool found = false;
      for (unsigned a = 1; a < bound && !found; ++a) {
        SparseRow unit{{index.at(Monomial::variable(n, v, a)), Rational(1)}};
        found = echelon.in_span(std::move(unit));
      }
      out.pure_powers_eliminated = found;
    }
  }
  return out;
}

}  // namespace

std::uint64_t truncated_quotient_dim(const Ideal& ideal, unsigned degree_bound,
                                     const OracleOptions& options) {
  if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
  const auto sys = build_and_reduce(ideal, degree_bound, options, false);
  return sys.columns - sys.rank;
}

std::vector<TruncationResult> colength_oracle_trace(const Ideal& ideal,
                                                    const OracleOptions& options) {
  std::vector<TruncationResult> trace;
  std::optional<std::uint64_t> previous;
  for (unsigned d = 1; d <= options.max_degree; ++d) {
    const auto sys = build_and_reduce(ideal, d, options, true);
    TruncationResult r;
    r.degree_bound = d;
    r.quotient_dim = sys.columns - sys.rank;
    r.stabilized = previous && *previous == r.quotient_dim && sys.pure_powers_eliminated;
    trace.push_back(r);
    if (r.stabilized) break;
    previous = r.quotient_dim;
  }
  return trace;
}

Colength colength_oracle(const Ideal& ideal, const OracleOptions& options) {
  const auto trace = colength_oracle_trace(ideal, options);
  if (!trace.empty() && trace.back().stabilized) return Colength::finite(trace.back().quotient_dim);
  return Colength::infinite();
}

}  // namespace singdef

#include "singdef/duval_slice.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"

namespace singdef {

namespace {

constexpr unsigned kRetries = 4;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t retry) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(retry)};
  std::mt19937_64 rng(seq);
  return rng();
}

AdeResult inconsistent(AdeType type, Colength mu, std::string why) {
  return {type, mu, std::move(why)};
}

}  // namespace

std::string AdeType::to_string() const {
  switch (family) {
    case AdeFamily::A:
      return "A(" + std::to_string(k) + ")";
    case AdeFamily::D:
      return "D(" + std::to_string(k) + ")";
    case AdeFamily::E:
      return "E" + std::to_string(k);
    case AdeFamily::Smooth:
      return "Smooth";
    case AdeFamily::NotDuVal:
      break;
  }
  return "NotDuVal";
}

std::string to_string(CubicPattern p) {
  switch (p) {
    case CubicPattern::ThreeDistinct:
      return "ThreeDistinct";
    case CubicPattern::DoublePlusSimple:
      return "DoublePlusSimple";
    case CubicPattern::Triple:
      return "Triple";
    case CubicPattern::Zero:
      break;
  }
  return "Zero";
}

CubicPattern binary_cubic_pattern(const Polynomial& b) {
  if (b.is_zero()) return CubicPattern::Zero;
  for (const auto& [m, c] : b.terms())
    if (m.degree() != 3) throw std::invalid_argument("binary cubic must be homogeneous of degree 3");
  const auto vars = b.active_variables();
  if (vars.size() > 2) throw std::invalid_argument("binary cubic has more than two variables");
  if (squarefree_part(b).degree() == 1) return CubicPattern::Triple;
  Polynomial g = b;
  for (auto v : vars) g = bivariate_gcd(g, partial_derivative(b, v));
  if (g.degree() == 1) return CubicPattern::DoublePlusSimple;
  return CubicPattern::ThreeDistinct;
}

AdeResult ade_classify(const Polynomial& g, const StandardBasisOptions& options) {
  if (sgn(g.constant_term()) != 0) throw std::invalid_argument("germ must vanish at the origin");
  const Colength mu = milnor_number(g, options);
  if (mu.is_infinite()) return {{AdeFamily::NotDuVal, 0}, mu, std::nullopt};
  const auto m = static_cast<unsigned>(mu.value());
  if (m == 0) return {{AdeFamily::Smooth, 0}, mu, std::nullopt};

  const RationalMatrix hessian = hessian_at_origin(g);
  const std::size_t corank = g.nvars() - hessian.rank();
  if (corank <= 1) return {{AdeFamily::A, m}, mu, std::nullopt};
  if (corank >= 3) return {{AdeFamily::NotDuVal, 0}, mu, std::nullopt};

  const auto kernel = hessian.nullspace();
  const RingPtr plane = curve_ring();
  const Polynomial s = Polynomial::variable(plane, 0), t = Polynomial::variable(plane, 1);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < g.nvars(); ++i) images.push_back(s * kernel[0][i] + t * kernel[1][i]);
  const Polynomial cubic = homogeneous_part(substitute(g, plane, images), 3);

  switch (binary_cubic_pattern(cubic)) {
    case CubicPattern::ThreeDistinct:
      if (m != 4)
        return inconsistent({AdeFamily::D, 4}, mu,
                            "three distinct cubic factors but Milnor number " + std::to_string(m));
      return {{AdeFamily::D, 4}, mu, std::nullopt};
    case CubicPattern::DoublePlusSimple:
      if (m < 5)
        return inconsistent({AdeFamily::D, m}, mu,
                            "double cubic factor but Milnor number " + std::to_string(m));
      return {{AdeFamily::D, m}, mu, std::nullopt};
    case CubicPattern::Triple:
      if (m >= 6 && m <= 8) return {{AdeFamily::E, m}, mu, std::nullopt};
      return {{AdeFamily::NotDuVal, 0}, mu, std::nullopt};
    case CubicPattern::Zero:
      break;
  }
  return {{AdeFamily::NotDuVal, 0}, mu, std::nullopt};
}

RingPtr surface_ring() {
  static const RingPtr ring = Ring::make({"x", "y", "z"});
  return ring;
}

Slice generic_hyperplane_slice(const Polynomial& f, std::uint64_t seed, unsigned bound) {
  if (f.nvars() != 4) throw std::invalid_argument("hyperplane slices need four variables");
  if (bound == 0) throw std::invalid_argument("coefficient bound must be positive");
  std::mt19937_64 rng(seed);
  RationalMatrix m = RationalMatrix::identity(4);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto draw = static_cast<long>(rng() % (2 * bound));
    const auto b = static_cast<long>(bound);
    m(3, j) = draw < b ? draw - b : draw - b + 1;
  }
  const RingPtr ring = surface_ring();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(Polynomial::variable(ring, i));
  Polynomial w(ring);
  for (std::size_t j = 0; j < 3; ++j) w += Polynomial::variable(ring, j) * m(3, j);
  images.push_back(std::move(w));
  return {substitute(f, ring, images), LinearChange(std::move(m))};
}

namespace {

struct TrialOutcome {
  std::optional<AdeResult> result;
  std::optional<LinearChange> change;
  unsigned slices = 0;
};

TrialOutcome run_trial(const Polynomial& f, std::uint64_t seed, unsigned trial,
                       const StandardBasisOptions& options) {
  TrialOutcome out;
  for (unsigned retry = 0; retry <= kRetries; ++retry) {
    Slice slice = generic_hyperplane_slice(f, derive_seed(seed, trial, retry), 3 + 2 * retry);
    ++out.slices;
    AdeResult res = ade_classify(slice.g, options);
    if (!res.inconsistency) {
      out.result = std::move(res);
      out.change = std::move(slice.change);
      break;
    }
  }
  return out;
}

bool finite_less(const Colength& a, const Colength& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

}  // namespace

SliceClassification is_cdv(const Polynomial& f, unsigned trials, std::uint64_t seed,
                           const StandardBasisOptions& options) {
  if (f.nvars() != 4) throw std::invalid_argument("cDV test needs four variables");
  if (trials == 0) throw std::invalid_argument("at least one slice trial is required");

  std::vector<TrialOutcome> outcomes;
  auto run_batch = [&](unsigned first, unsigned count) {
    std::vector<std::future<TrialOutcome>> jobs;
    for (unsigned t = first; t < first + count; ++t)
      jobs.push_back(std::async(std::launch::async, run_trial, std::cref(f), seed, t,
                                std::cref(options)));
    for (auto& j : jobs) outcomes.push_back(j.get());
  };

  SliceClassification out;
  std::optional<std::size_t> best;
  for (unsigned round = 0; round < 2; ++round) {
    run_batch(round * trials, trials);
    best.reset();
    std::set<std::string> verdicts_at_min;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (!outcomes[i].result) continue;
      const auto& r = *outcomes[i].result;
      if (!best || finite_less(r.milnor, outcomes[*best].result->milnor)) {
        best = i;
        verdicts_at_min = {r.type.to_string()};
      } else if (r.milnor == outcomes[*best].result->milnor) {
        verdicts_at_min.insert(r.type.to_string());
      }
    }
    if (best && verdicts_at_min.size() == 1) break;
    best.reset();
  }
  for (const auto& o : outcomes) out.slices_tried += o.slices;
  if (!best)
    throw InconsistentSliceError(
        "hyperplane slices gave inconsistent classifications; try another --seed or more --trials");

  const AdeResult& generic = *outcomes[*best].result;
  out.generic_section = generic.type;
  out.generic_milnor = generic.milnor;
  out.witness_change = *outcomes[*best].change;

  const AdeResult stable = ade_classify(f, options);
  if (stable.inconsistency) throw std::logic_error("stable type: " + *stable.inconsistency);
  if (stable.type.is_du_val()) {
    if (!generic.type.is_du_val())
      throw InconsistentSliceError("generic slice is not Du Val although the germ is a suspension "
                                   "of " + stable.type.to_string());
    out.verdict = stable.type;
    out.surface_milnor = stable.milnor;
    out.stable_type = true;
  } else {
    out.verdict = generic.type.is_du_val() ? generic.type : AdeType{AdeFamily::NotDuVal, 0};
    out.surface_milnor = generic.milnor;
  }
  return out;
}

}  // namespace singdef

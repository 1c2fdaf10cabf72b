#include "singdef/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"

namespace singdef {

namespace {

constexpr const char* kLocallyFactorial =
    "σ = 0 (locally factorial): no small resolution with 1-dimensional exceptional fiber";
constexpr const char* kNonIntegral = "b^{1,1} non-integral: inputs inconsistent";
constexpr const char* kHypotheses = "Theorem hypotheses violated";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

template <class T>
T parse_number(std::string_view text, std::size_t offset) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(text) + "'", offset);
  return value;
}

}  // namespace

SingularityReport assemble(long mu, long tau, long sigma, const SliceClassification& cdv,
                           SigmaProvenance provenance) {
  if (mu < 1 || tau < 1 || sigma < 0)
    throw std::invalid_argument("assemble needs mu >= 1, tau >= 1 and sigma >= 0");
  SingularityReport rep;
  rep.mu = mu;
  rep.tau = tau;
  rep.sigma = sigma;
  rep.sigma_provenance = provenance;
  rep.cdv = cdv;
  rep.l11 = sigma;
  rep.dim_def_V = tau;
  rep.chi_top_F = 1 - mu;
  rep.chi_top_E = sigma + 1;

  bool ok = true;
  if (!cdv.verdict.is_du_val()) {
    rep.diagnostics.push_back("not compound Du Val: " + cdv.verdict.to_string());
    ok = false;
  }
  if (sigma == 0) {
    rep.diagnostics.push_back(kLocallyFactorial);
    ok = false;
  }
  if ((mu - sigma) % 2 != 0) {
    rep.diagnostics.push_back(kNonIntegral);
    ok = false;
  } else {
    rep.b11 = (mu - sigma) / 2;
    rep.b21 = tau - (mu + sigma) / 2;
    rep.dim_def_X = rep.b21;
    if (*rep.b21 < 0 || *rep.b11 < 0) {
      rep.diagnostics.push_back(std::string(kHypotheses) + ": b^{2,1} = " + std::to_string(*rep.b21) +
                                ", b^{1,1} = " + std::to_string(*rep.b11));
      ok = false;
    }
  }
  rep.applicable = ok;
  if (rep.applicable) {
    const auto broken = identity_violations(rep);
    if (!broken.empty()) throw std::logic_error("report identities failed: " + broken.front());
    rep.corollary = corollary_conditions(rep);
  }
  return rep;
}

CorollaryFlags corollary_conditions(const SingularityReport& rep) {
  if (!rep.applicable) throw std::invalid_argument("corollary conditions need an applicable report");
  return {rep.mu == 1, rep.dim_def_V == *rep.dim_def_X + 1, *rep.b11 == 0, *rep.b21 == 0};
}

std::vector<std::string> identity_violations(const SingularityReport& rep) {
  std::vector<std::string> out;
  auto check = [&](bool holds, const char* what) {
    if (!holds) out.emplace_back(what);
  };
  check(rep.l11 == rep.sigma, "l11 = sigma");
  check(rep.chi_top_F == 1 - rep.mu, "chi_top_F = 1 - mu");
  check(rep.chi_top_E == rep.sigma + 1, "chi_top_E = sigma + 1");
  check(rep.dim_def_V == rep.tau, "dim_def_V = tau");
  if (!rep.b11 || !rep.b21 || !rep.dim_def_X) {
    check((rep.mu - rep.sigma) % 2 != 0, "b11 present when mu = sigma (mod 2)");
    return out;
  }
  check(rep.mu == 2 * *rep.b11 + rep.l11, "mu = 2 b11 + l11");
  check(rep.tau == *rep.b21 + *rep.b11 + rep.l11, "tau = b21 + b11 + l11");
  check(*rep.dim_def_X == *rep.b21, "dim_def_X = b21");
  check(2 * *rep.dim_def_X == 2 * rep.tau - (rep.mu + rep.sigma), "dim_def_X = tau - (mu + sigma)/2");
  check(2 * *rep.dim_def_X == 2 * rep.tau + (rep.chi_top_F - rep.chi_top_E),
        "dim_def_X = tau + (chi_top_F - chi_top_E)/2");
  return out;
}

JobResult run_job(const Job& job, const StandardBasisOptions& options) {
  JobResult out;
  auto fail = [&](int code, std::string message) {
    out.exit_code = code;
    out.diagnostics.push_back(std::move(message));
    return out;
  };
  try {
    if (job.vars.size() != 4)
      return fail(kExitParseError, "expected exactly four variables, got " +
                                       std::to_string(job.vars.size()));
    const Polynomial f = parse_polynomial(ExprSource{job.poly, job.vars});
    std::optional<Polynomial> ca;
    if (job.ca_form) ca = parse_polynomial(ExprSource{*job.ca_form, {job.vars[2], job.vars[3]}});
    if (sgn(f.constant_term()) != 0)
      return fail(kExitParseError, "f(0) != 0: the origin does not lie on the hypersurface");

    const Colength mu = milnor_number(f, options);
    if (mu.is_infinite())
      return fail(kExitNonIsolated,
                  "non-isolated singularity: the Milnor number is infinite (or exceeds " +
                      std::to_string(options.max_cut_degree) + ")");
    out.mu = static_cast<long>(mu.value());
    if (*out.mu == 0) return fail(kExitNotCdv, "smooth point: f has a nonzero linear part");
    out.tau = static_cast<long>(tjurina_number(f, options).value());

    out.cdv = is_cdv(f, job.trials, job.seed, options);
    if (!out.cdv->verdict.is_du_val())
      return fail(kExitNotCdv, "not compound Du Val: the generic hyperplane section is " +
                                   out.cdv->generic_section.to_string() + " with Milnor number " +
                                   out.cdv->generic_milnor.to_string());

    const SigmaResult s = sigma(f, job.sigma, ca);
    out.report = assemble(*out.mu, *out.tau, s.sigma, *out.cdv, s.provenance);
    if (job.sigma && !ca) {
      if (auto detected = detect_ca_form(f)) {
        const unsigned computed = count_branches(*detected).r - 1;
        if (computed != *job.sigma)
          out.report->diagnostics.push_back("supplied sigma " + std::to_string(*job.sigma) +
                                            " differs from the branch count value " +
                                            std::to_string(computed));
      }
    }
  } catch (const ParseError& e) {
    return fail(kExitParseError, std::string("parse error: ") + e.what());
  } catch (const SigmaUnavailableError& e) {
    return fail(kExitSigmaUnavailable, e.what());
  } catch (const ResourceLimitError& e) {
    return fail(kExitResourceLimit, std::string("resource limit: ") + e.what());
  } catch (const InconsistentSliceError& e) {
    return fail(kExitNotCdv, std::string("cDV test inconclusive: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitParseError, std::string("invalid input: ") + e.what());
  }
  return out;
}

std::string to_json(const JobResult& result, int indent) {
  using nlohmann::ordered_json;
  const SingularityReport* rep = result.report ? &*result.report : nullptr;
  auto opt = [](const std::optional<long>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
  auto field = [&](auto member) { return rep ? ordered_json(rep->*member) : ordered_json(nullptr); };

  ordered_json j;
  j["mu"] = opt(result.mu);
  j["tau"] = opt(result.tau);
  j["sigma"] = field(&SingularityReport::sigma);
  j["sigma_provenance"] = rep ? ordered_json(to_string(rep->sigma_provenance)) : ordered_json(nullptr);
  j["l11"] = field(&SingularityReport::l11);
  j["b11"] = rep ? opt(rep->b11) : ordered_json(nullptr);
  j["b21"] = rep ? opt(rep->b21) : ordered_json(nullptr);
  j["dim_def_X"] = rep ? opt(rep->dim_def_X) : ordered_json(nullptr);
  j["dim_def_V"] = field(&SingularityReport::dim_def_V);
  j["chi_top_F"] = field(&SingularityReport::chi_top_F);
  j["chi_top_E"] = field(&SingularityReport::chi_top_E);
  j["cdv_verdict"] = result.cdv ? ordered_json(result.cdv->verdict.to_string()) : ordered_json(nullptr);
  j["corollary"] = rep && rep->corollary ? ordered_json(*rep->corollary) : ordered_json(nullptr);
  j["applicable"] = rep != nullptr && rep->applicable;
  std::vector<std::string> diagnostics = result.diagnostics;
  if (rep) diagnostics.insert(diagnostics.end(), rep->diagnostics.begin(), rep->diagnostics.end());
  j["diagnostics"] = diagnostics;
  j["version"] = kReportVersion;
  return j.dump(indent);
}

std::string to_text(const JobResult& result) {
  std::ostringstream os;
  auto line = [&](const char* key, const std::string& value) {
    os << key << std::string(20 - std::string(key).size(), ' ') << value << '\n';
  };
  auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("-"); };
  line("mu", opt(result.mu));
  line("tau", opt(result.tau));
  if (result.cdv) {
    line("cdv verdict", result.cdv->verdict.to_string() +
                            (result.cdv->stable_type ? " (stable type)" : " (generic section)"));
    line("generic section", result.cdv->generic_section.to_string() + ", surface mu " +
                                result.cdv->generic_milnor.to_string());
  }
  if (const auto& rep = result.report) {
    line("sigma", std::to_string(rep->sigma) + " (" + to_string(rep->sigma_provenance) + ")");
    line("l11", std::to_string(rep->l11));
    line("b11", opt(rep->b11));
    line("b21", opt(rep->b21));
    line("dim Def(X)", opt(rep->dim_def_X));
    line("dim Def(V)", std::to_string(rep->dim_def_V));
    line("chi_top(F)", std::to_string(rep->chi_top_F));
    line("chi_top(E)", std::to_string(rep->chi_top_E));
    if (rep->corollary) {
      std::string flags;
      for (bool b : *rep->corollary) flags += b ? "T" : "F";
      line("corollary (1)-(4)", flags);
    }
    line("applicable", rep->applicable ? "yes" : "no");
    for (const auto& d : rep->diagnostics) line("note", d);
  }
  for (const auto& d : result.diagnostics) line("error", d);
  return os.str();
}

std::optional<Job> parse_batch_line(const std::string& line) {
  const std::string stripped = trim(line);
  if (stripped.empty() || stripped.front() == '#') return std::nullopt;
  Job job;
  std::size_t start = 0;
  bool first = true;
  while (start <= line.size()) {
    std::size_t bar = line.find('|', start);
    if (bar == std::string::npos) bar = line.size();
    const std::string part = trim(std::string_view(line).substr(start, bar - start));
    if (first) {
      if (part.empty()) throw ParseError("missing polynomial", start);
      job.poly = part;
      first = false;
    } else {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value option", start);
      const std::string key = trim(std::string_view(part).substr(0, eq));
      const std::string value = trim(std::string_view(part).substr(eq + 1));
      if (key == "sigma")
        job.sigma = parse_number<unsigned>(value, start);
      else if (key == "ca")
        job.ca_form = value;
      else if (key == "seed")
        job.seed = parse_number<std::uint64_t>(value, start);
      else if (key == "trials")
        job.trials = parse_number<unsigned>(value, start);
      else
        throw ParseError("unknown batch option '" + key + "'", start);
    }
    start = bar + 1;
  }
  return job;
}

std::vector<BatchEntry> run_batch(const std::vector<std::string>& lines,
                                  const StandardBasisOptions& options) {
  std::vector<BatchEntry> entries;
  std::vector<std::optional<Job>> jobs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      auto job = parse_batch_line(lines[i]);
      if (!job) continue;
      entries.push_back({i + 1, {}});
      jobs.push_back(std::move(job));
    } catch (const ParseError& e) {
      BatchEntry bad{i + 1, {}};
      bad.result.exit_code = kExitParseError;
      bad.result.diagnostics.push_back(std::string("parse error: ") + e.what());
      entries.push_back(std::move(bad));
      jobs.emplace_back();
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();)
      if (jobs[i]) entries[i].result = run_job(*jobs[i], options);
  };
  const std::size_t n = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::min(n, jobs.size()); ++t) pool.emplace_back(worker);
  pool.clear();
  return entries;
}

const std::vector<CatalogGerm>& builtin_catalog() {
  static const std::vector<CatalogGerm> catalog = [] {
    std::vector<CatalogGerm> c{
        {"ordinary double point", "x^2 + y^2 + z^2 + w^2", true, true},
        {"ordinary double point, split form", "x*y - z*w", true, true},
        {"three lines", "x*y - z*w*(z + w)", true, true},
        {"three lines, cubic", "x*y - z^3 + w^3", true, true},
        {"four tangent parabolas", "x*y - (z^2 - w^4)*(z^2 - 4*w^4)", true, true},
        {"cA over a D6 curve", "x^2 + y^2 - z^2*w - w^5", true, true},
        {"cA over four lines", "x^2 + y^2 + z^4 + w^4", true, true},
    };
    for (int k = 2; k <= 5; ++k)
      c.push_back({"suspended A(" + std::to_string(2 * k - 1) + ")",
                   "x^2 + y^2 + z^2 + w^" + std::to_string(2 * k), true, true});
    for (int k = 1; k <= 5; ++k)
      c.push_back({"suspended A(" + std::to_string(2 * k) + ")",
                   "x^2 + y^2 + z^2 + w^" + std::to_string(2 * k + 1), true, false});
    return c;
  }();
  return catalog;
}

}  // namespace singdef

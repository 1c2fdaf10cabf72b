#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "singdef/classgroup.hpp"
#include "singdef/duval_slice.hpp"
#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"
#include "singdef/macaulay.hpp"
#include "singdef/report.hpp"

using namespace singdef;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Polynomial P(const std::string& text) { return parse_polynomial(text, threefold_ring()); }

JobResult analyze(const std::string& poly) {
  Job job;
  job.poly = poly;
  return run_job(job);
}

Colength oracle_mu(const Polynomial& f) { return colength_oracle(jacobian_ideal(f)); }
Colength oracle_tau(const Polynomial& f) { return colength_oracle(tjurina_ideal(f)); }

void odp(Checker& c) {
  const JobResult r = analyze("x^2+y^2+z^2+w^2");
  c.expect(r.exit_code == kExitOk && r.report.has_value(), "exit code 0 with a report");
  if (!r.report) return;
  const auto& rep = *r.report;
  c.expect(rep.mu == 1 && rep.tau == 1 && rep.sigma == 1, "mu = tau = sigma = 1");
  c.expect(rep.dim_def_X == 0 && rep.b21 == 0 && rep.b11 == 0 && rep.l11 == 1,
           "dim_def_X = b21 = b11 = 0, l11 = 1");
  c.expect(rep.corollary == CorollaryFlags{true, true, true, true}, "all four conditions hold");
}

void suspended_a_family(Checker& c) {
  for (long k = 1; k <= 5; ++k) {
    const std::string even = "x^2+y^2+z^2+w^" + std::to_string(2 * k);
    const Polynomial f = P(even);
    const Colength expected = Colength::finite(2 * k - 1);
    c.expect(oracle_mu(f) == expected && oracle_tau(f) == expected, even + ": oracle mu = tau = 2k-1");
    const JobResult r = analyze(even);
    if (!r.report) {
      c.expect(false, even + ": no report");
      continue;
    }
    const auto& rep = *r.report;
    c.expect(rep.mu == 2 * k - 1 && rep.tau == 2 * k - 1, even + ": mu = tau = 2k-1");
    c.expect(rep.sigma == 1, even + ": sigma = 1");
    c.expect(rep.dim_def_X == k - 1, even + ": dim_def_X = k-1");
    c.expect(rep.cdv.verdict == AdeType{AdeFamily::A, static_cast<unsigned>(2 * k - 1)},
             even + ": verdict A(2k-1)");

    const std::string odd = "x^2+y^2+z^2+w^" + std::to_string(2 * k + 1);
    const JobResult s = analyze(odd);
    c.expect(s.report && s.report->sigma == 0 && !s.report->applicable &&
                 !s.report->diagnostics.empty(),
             odd + ": sigma = 0 flagged inapplicable");
  }
}

void triple_branch(Checker& c) {
  const std::string poly = "x*y - z*w*(z+w)";
  const Polynomial f = P(poly);
  c.expect(oracle_mu(f) == Colength::finite(4) && oracle_tau(f) == Colength::finite(4),
           "oracle mu = tau = 4");
  const JobResult r = analyze(poly);
  if (!r.report) return c.expect(false, "no report");
  const auto& rep = *r.report;
  c.expect(rep.mu == 4 && rep.tau == 4 && rep.sigma == 2, "mu = tau = 4, sigma = 2");
  c.expect(rep.dim_def_X == 1 && rep.b21 == 1 && rep.b11 == 1, "dim_def_X = b21 = b11 = 1");
}

Rational small_coefficient(std::mt19937_64& rng) {
  const int v = static_cast<int>(rng() % 3) + 1;
  return rng() % 2 ? v : -v;
}

// Quadratic part of rank 4, or of rank 2-3 completed by pure powers of
// degree 3-4, plus two to four random monomials of degree 3-4.
Polynomial random_germ(std::mt19937_64& rng, bool full_rank) {
  const RingPtr ring = threefold_ring();
  std::vector<std::size_t> perm{0, 1, 2, 3};
  std::shuffle(perm.begin(), perm.end(), rng);
  const std::size_t rank = full_rank ? 4 : 2 + rng() % 2;
  Polynomial f(ring);
  for (std::size_t i = 0; i < rank; ++i) {
    const Polynomial v = Polynomial::variable(ring, perm[i]);
    f += v * v * small_coefficient(rng);
  }
  if (full_rank && rng() % 2)
    f += Polynomial::variable(ring, perm[0]) * Polynomial::variable(ring, perm[1]);
  for (std::size_t i = rank; i < 4; ++i) {
    Monomial m(4);
    m.set(perm[i], 3 + rng() % 2);
    f += Polynomial::monomial(ring, m, small_coefficient(rng));
  }
  const std::size_t extra = 2 + rng() % 3;
  for (std::size_t t = 0; t < extra; ++t) {
    const unsigned degree = 3 + rng() % 2;
    Monomial m(4);
    for (unsigned d = 0; d < degree; ++d) {
      const std::size_t v = rng() % 4;
      m.set(v, m[v] + 1);
    }
    f += Polynomial::monomial(ring, m, small_coefficient(rng));
  }
  return f;
}

void oracle_equivalence(Checker& c) {
  std::mt19937_64 rng(20240601);
  unsigned accepted = 0, attempts = 0;
  std::uint64_t mu_min = ~0ull, mu_max = 0;
  while (accepted < 40 && attempts < 400) {
    const Polynomial f = random_germ(rng, attempts++ % 2 == 0);
    if (hessian_at_origin(f).rank() < 2) continue;
    Colength om = Colength::infinite(), ot = om;
    try {
      om = oracle_mu(f);
      ot = oracle_tau(f);
    } catch (const ResourceLimitError&) {
      continue;
    }
    if (om.is_infinite()) continue;
    ++accepted;
    mu_min = std::min(mu_min, om.value());
    mu_max = std::max(mu_max, om.value());
    const std::string text = render_polynomial(f);
    c.expect(milnor_number(f) == om, text + ": mu " + milnor_number(f).to_string() +
                                         " vs oracle " + om.to_string());
    c.expect(tjurina_number(f) == ot, text + ": tau " + tjurina_number(f).to_string() +
                                          " vs oracle " + ot.to_string());
  }
  c.expect(accepted >= 20, "only " + std::to_string(accepted) + " isolated germs generated");
  std::cout << "  " << accepted << " random isolated germs compared, mu from " << mu_min << " to "
            << mu_max << '\n';
}

void identity_suite(Checker& c) {
  for (const auto& germ : builtin_catalog()) {
    const JobResult r = analyze(germ.poly);
    if (!r.report) {
      c.expect(false, germ.poly + ": no report");
      continue;
    }
    if (!r.report->applicable) continue;
    for (const auto& v : identity_violations(*r.report)) c.expect(false, germ.poly + ": " + v);
    const auto& flags = *r.report->corollary;
    c.expect(flags[0] == flags[1] && flags[1] == flags[2] && flags[2] == flags[3],
             germ.poly + ": corollary conditions disagree");
  }
}

void branch_parity(Checker& c) {
  for (const auto& germ : builtin_catalog()) {
    if (!germ.ca_form) continue;
    const Polynomial f = P(germ.poly);
    const auto g = detect_ca_form(f);
    if (!g) {
      c.expect(false, germ.poly + ": cA form not detected");
      continue;
    }
    const unsigned r = count_branches(*g).r;
    const auto mu = milnor_number(f).value();
    c.expect(r % 2 == (mu + 1) % 2, germ.poly + ": r = " + std::to_string(r) + ", mu = " +
                                        std::to_string(mu));
  }
}

void ade_recognizer(Checker& c) {
  std::vector<std::pair<std::string, AdeType>> forms;
  for (unsigned k = 1; k <= 8; ++k)
    forms.emplace_back("x^2+y^2+z^" + std::to_string(k + 1), AdeType{AdeFamily::A, k});
  for (unsigned k = 4; k <= 8; ++k)
    forms.emplace_back("x^2+y^2*z+z^" + std::to_string(k - 1), AdeType{AdeFamily::D, k});
  forms.emplace_back("x^2+y^3+z^4", AdeType{AdeFamily::E, 6});
  forms.emplace_back("x^2+y^3+y*z^3", AdeType{AdeFamily::E, 7});
  forms.emplace_back("x^2+y^3+z^5", AdeType{AdeFamily::E, 8});
  std::mt19937_64 seeds(7);
  unsigned right = 0, total = 0;
  for (const auto& [g, type] : forms)
    for (int s = 0; s < 5; ++s) {
      const std::uint64_t seed = seeds();
      const SliceClassification cls = is_cdv(P(g + "+w^2"), 3, seed);
      ++total;
      if (cls.verdict == type)
        ++right;
      else
        c.expect(false, g + " seed " + std::to_string(seed) + ": got " + cls.verdict.to_string());
    }
  std::cout << "  " << right << "/" << total << " classifications correct\n";
}

int run_cli(const std::string& exe, const std::string& args, std::string& diagnostic) {
  const std::string err = "acceptance_stderr.txt";
  const std::string cmd = "'" + exe + "' " + args + " > /dev/null 2> " + err;
  const int status = std::system(cmd.c_str());
  std::ifstream in(err);
  std::stringstream ss;
  ss << in.rdbuf();
  diagnostic = ss.str();
  std::remove(err.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void robustness(Checker& c, const std::string& exe) {
  if (exe.empty()) return c.expect(false, "path to the singdef executable not given");
  const std::vector<std::tuple<std::string, std::string, int>> cases{
      {"non-isolated", "analyze --poly \"x^2+y^2+z^2\"", kExitNonIsolated},
      {"not cDV", "analyze --poly \"x^3+y^3+z^3+w^3\"", kExitNotCdv},
      {"cD without --sigma", "analyze --poly \"x^2+y^2*z+z^3+w^3\"", kExitSigmaUnavailable},
  };
  for (const auto& [name, args, code] : cases) {
    std::string diagnostic;
    const int got = run_cli(exe, args, diagnostic);
    c.expect(got == code, name + ": exit " + std::to_string(got) + ", want " + std::to_string(code));
    c.expect(diagnostic.size() > 10, name + ": no diagnostic on stderr");
    std::cout << "  " << name << ": " << diagnostic;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria{
      {"ODP reproduction", odp},
      {"suspended A-family", suspended_a_family},
      {"triple-branch example", triple_branch},
      {"oracle equivalence on random isolated germs", oracle_equivalence},
      {"identity suite", identity_suite},
      {"branch-count parity", branch_parity},
      {"ADE recognizer", ade_recognizer},
      {"robustness exit codes", [&](Checker& c) { robustness(c, exe); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool pass = c.failures.empty();
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << '\n';
    for (const auto& f : c.failures) std::cout << "  " << f << '\n';
    if (!pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

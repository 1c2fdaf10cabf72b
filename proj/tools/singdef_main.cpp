#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "singdef/errors.hpp"
#include "singdef/expr_parser.hpp"
#include "singdef/macaulay.hpp"
#include "singdef/report.hpp"

using namespace singdef;

namespace {

void print(const JobResult& r, bool text) {
  if (text)
    std::cout << to_text(r);
  else
    std::cout << to_json(r) << '\n';
  if (r.exit_code != kExitOk)
    for (const auto& d : r.diagnostics) std::cerr << "singdef: " << d << '\n';
}

int run_batch_file(const std::string& path, bool text) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "singdef: cannot open " << path << '\n';
    return kExitParseError;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  int worst = kExitOk;
  for (const auto& e : run_batch(lines)) {
    worst = std::max(worst, e.result.exit_code);
    if (text) {
      std::cout << "# line " << e.line << " (exit " << e.result.exit_code << ")\n"
                << to_text(e.result) << '\n';
    } else {
      nlohmann::ordered_json j;
      j["line"] = e.line;
      j["exit_code"] = e.result.exit_code;
      j["report"] = nlohmann::ordered_json::parse(to_json(e.result, -1));
      std::cout << j.dump() << '\n';
    }
  }
  return worst;
}

int selftest() {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };
  for (const auto& germ : builtin_catalog()) {
    Job job;
    job.poly = germ.poly;
    const JobResult r = run_job(job);
    const std::string tag = germ.name + " [" + germ.poly + "]";
    report(r.exit_code == kExitOk && r.report, tag + ": analyzed");
    if (!r.report) continue;
    const auto& rep = *r.report;
    report(rep.applicable == germ.applicable, tag + ": applicability");

    const Polynomial f = parse_polynomial(germ.poly, threefold_ring());
    report(colength_oracle(jacobian_ideal(f)) == Colength::finite(rep.mu), tag + ": mu matches oracle");
    report(colength_oracle(tjurina_ideal(f)) == Colength::finite(rep.tau),
           tag + ": tau matches oracle");
    if (germ.ca_form) report((rep.sigma + 1) % 2 == (rep.mu + 1) % 2, tag + ": branch parity");
    if (!rep.applicable) continue;
    report(identity_violations(rep).empty(), tag + ": identities");
    const auto& c = *rep.corollary;
    report(c[0] == c[1] && c[1] == c[2] && c[2] == c[3], tag + ": corollary equivalence");
  }
  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED: " + std::to_string(failures))
            << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformation invariants of isolated 3-fold hypersurface singularities"};
  app.require_subcommand(1);

  Job job;
  bool json = false, text = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze one germ");
  analyze->add_option("--poly", job.poly, "Polynomial f in the variables")->required();
  analyze->add_option("--vars", job.vars, "Four variable names")->delimiter(',')->expected(4);
  analyze->add_option("--sigma", job.sigma, "Rank of the local class group");
  analyze->add_option("--ca-form", job.ca_form, "Curve germ g with f = q - g, in the last two variables");
  analyze->add_option("--seed", job.seed, "Seed for hyperplane slices");
  analyze->add_option("--trials", job.trials, "Number of slices")->check(CLI::PositiveNumber);
  auto* json_flag = analyze->add_flag("--json", json, "JSON output (default)");
  analyze->add_flag("--text", text, "Plain-text output")->excludes(json_flag);

  std::string batch_file;
  bool batch_text = false;
  auto* batch = app.add_subcommand("batch", "Analyze one job per line of a file");
  batch->add_option("--file", batch_file, "Job file")->required();
  batch->add_flag("--text", batch_text, "Plain-text output");

  app.add_subcommand("selftest", "Run the built-in catalog against the oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParseError;
  }

  if (analyze->parsed()) {
    const JobResult r = run_job(job);
    print(r, text);
    return r.exit_code;
  }
  if (batch->parsed()) return run_batch_file(batch_file, batch_text);
  return selftest();
}

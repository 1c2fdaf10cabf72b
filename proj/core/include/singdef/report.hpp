#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singdef/classgroup.hpp"
#include "singdef/duval_slice.hpp"

namespace singdef {

inline constexpr const char* kReportVersion = "singdef-report/1";

// Conditions (1)-(4): ordinary double point, dim Def(V) = dim Def(X) + 1,
// b11 = 0, b21 = 0.
using CorollaryFlags = std::array<bool, 4>;

struct SingularityReport {
  long mu = 0;
  long tau = 0;
  long sigma = 0;
  SigmaProvenance sigma_provenance = SigmaProvenance::UserSupplied;
  long l11 = 0;
  // Unset when mu - sigma is odd, i.e. the inputs are inconsistent.
  std::optional<long> b11;
  std::optional<long> b21;
  std::optional<long> dim_def_X;
  long dim_def_V = 0;
  long chi_top_F = 0;
  long chi_top_E = 0;
  SliceClassification cdv;
  // Set only for applicable reports.
  std::optional<CorollaryFlags> corollary;
  bool applicable = false;
  std::vector<std::string> diagnostics;
};

// Throws std::invalid_argument unless mu, tau >= 1 and sigma >= 0.
// Inapplicability is reported through diagnostics.
SingularityReport assemble(long mu, long tau, long sigma, const SliceClassification& cdv,
                           SigmaProvenance provenance = SigmaProvenance::UserSupplied);

// Requires rep.applicable.
CorollaryFlags corollary_conditions(const SingularityReport& rep);

// Recomputes mu and tau from (b21, b11, l11), both dim Def(X) formulas and
// the Euler characteristics; returns one message per failed identity.
std::vector<std::string> identity_violations(const SingularityReport& rep);

enum ExitCode : int {
  kExitOk = 0,
  kExitNonIsolated = 2,
  kExitNotCdv = 3,
  kExitSigmaUnavailable = 4,
  kExitParseError = 5,
  kExitResourceLimit = 6,
};

struct Job {
  std::string poly;
  std::vector<std::string> vars{"x", "y", "z", "w"};
  std::optional<unsigned> sigma;
  // Residual curve germ in the last two variables.
  std::optional<std::string> ca_form;
  std::uint64_t seed = 1;
  unsigned trials = 3;
};

struct JobResult {
  int exit_code = kExitOk;
  std::optional<long> mu, tau;
  std::optional<SliceClassification> cdv;
  std::optional<SingularityReport> report;
  // Error text for nonzero exit codes.
  std::vector<std::string> diagnostics;
};

// parse -> isolation -> mu, tau -> cDV -> sigma -> assemble. Never throws
// for bad input; the outcome is encoded in exit_code.
JobResult run_job(const Job& job, const StandardBasisOptions& options = {});

// One document per result with the stable field order; fields that were
// not reached are null.
std::string to_json(const JobResult& result, int indent = 2);
std::string to_text(const JobResult& result);

// `<poly> [| sigma=N] [| ca=<expr>]`; blank lines and lines starting with
// '#' yield nullopt. Throws ParseError on malformed options.
std::optional<Job> parse_batch_line(const std::string& line);

struct BatchEntry {
  std::size_t line = 0;
  JobResult result;
};

// Runs the jobs concurrently; results keep input order. Malformed lines
// become entries with exit code kExitParseError.
std::vector<BatchEntry> run_batch(const std::vector<std::string>& lines,
                                  const StandardBasisOptions& options = {});

struct CatalogGerm {
  std::string name;
  std::string poly;
  // Present for germs of the form q(x, y) - g(z, w).
  bool ca_form = false;
  bool applicable = false;
};

// Germs exercised by `singdef selftest` and the identity suite.
const std::vector<CatalogGerm>& builtin_catalog();

}  // namespace singdef

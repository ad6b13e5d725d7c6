#ifndef TSCAT_TOOLS_VERIFY_HPP
#define TSCAT_TOOLS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tscat_tools/runconfig.hpp"

namespace tscat::tools {

struct CheckResult {
  std::string tag;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SkipEntry {
  std::string suite;
  std::string tag;
  std::string reason;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  /// suite-specific report payload (e.g. the kappa draws the oracle suite
  /// tested), merged into the suite object on serialization
  ordered_json extra = ordered_json::object();

  bool pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Sabotage hook for testing the verifier itself: flips the sign of kappa
  /// on the computed side of the oracle comparison, which must blow the
  /// residual up to order one.
  bool corrupt_kappa_sign = false;
};

struct VerificationReport {
  std::string version = "0.1.0";
  std::string config_hash;
  std::uint64_t seed = 1;
  ordered_json environment = ordered_json::object();
  std::vector<SuiteResult> suites;
  std::vector<SkipEntry> skipped;

  bool all_pass() const;
  /// Deterministic serialization: fixed key order, no timestamps, nothing
  /// environment-dependent beyond the recorded fields.
  ordered_json to_json() const;
  std::string to_text() const;
};

/// suite names accepted in RunConfig::suites, in canonical order
const std::vector<std::string>& known_suites();

/// Run the requested suites against the configured system.  An empty suite
/// list and unknown suite names are configuration errors.  Typed evaluation
/// failures inside a suite become skip entries with their reason, never
/// silent gaps.  The report depends only on the configuration and the seed.
VerificationReport run_verify(const RunConfig& cfg, const VerifyOptions& opt = {});

}  // namespace tscat::tools

#endif

#include "tscat_tools/verify.hpp"

#include <algorithm>
#include <string>

#include "doctest.h"
#include "tscat/errors.hpp"

using namespace tscat;
using namespace tscat::tools;

namespace {

RunConfig star_config(const std::string& suites_json) {
  return parse_config(R"({
    "model": {"kind": "star_graph", "n": 1},
    "alpha": "sqrt2I",
    "kappa": "diag:[1.0]",
    "k_grid": {"min": 0.1, "max": 10.0, "count": 12},
    "hardy": {"N": 4096, "L": 50.0},
    "suites": )" + suites_json +
                          "}", true);
}

}  // namespace

TEST_CASE("the suite registry matches the configuration vocabulary") {
  CHECK(known_suites() == all_suite_names());
}

TEST_CASE("suite selection is validated before any work happens") {
  RunConfig cfg = star_config(R"(["herglotz"])");
  cfg.suites.clear();
  CHECK_THROWS_AS((void)run_verify(cfg), ConfigError);
  cfg.suites = {"herglotz", "no-such-suite"};
  CHECK_THROWS_AS((void)run_verify(cfg), ConfigError);
}

TEST_CASE("the fast algebraic suites pass on a seeded star graph") {
  const RunConfig cfg = star_config(
      R"(["herglotz", "cayley", "theta-identities", "inverse-formulas",
          "weight-identity", "oracle-equivalence"])");
  const VerificationReport rep = run_verify(cfg);
  CHECK(rep.all_pass());
  CHECK(rep.suites.size() == 6);
  CHECK(rep.config_hash == cfg.config_hash());
  for (const SuiteResult& sr : rep.suites) {
    CHECK(sr.pass());
    CHECK_FALSE(sr.checks.empty());
  }
}

TEST_CASE("reports are deterministic for a fixed configuration and seed") {
  const RunConfig cfg = star_config(R"(["herglotz", "oracle-equivalence", "scattering-maps"])");
  const std::string a = run_verify(cfg).to_json().dump();
  const std::string b = run_verify(cfg).to_json().dump();
  CHECK(a == b);
}

TEST_CASE("different seeds draw different oracle test matrices") {
  const RunConfig cfg = star_config(R"(["oracle-equivalence"])");
  VerifyOptions o1, o2;
  o1.seed = 1;
  o2.seed = 2;
  const auto a = run_verify(cfg, o1).to_json();
  const auto b = run_verify(cfg, o2).to_json();
  CHECK(a.at("suites")[0].at("kappa_draws") != b.at("suites")[0].at("kappa_draws"));
}

TEST_CASE("the sabotage hook makes the oracle suite fail loudly") {
  const RunConfig cfg = star_config(R"(["oracle-equivalence"])");
  VerifyOptions opt;
  opt.corrupt_kappa_sign = true;
  const VerificationReport rep = run_verify(cfg, opt);
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.suites.size() == 1);
  REQUIRE(rep.suites[0].checks.size() == 1);
  CHECK(rep.suites[0].checks[0].residual > 0.1);
}

TEST_CASE("model-space suites skip with a reason on grids below calibration") {
  RunConfig cfg = parse_config(R"({
    "model": {"kind": "star_graph", "n": 1},
    "kappa": "diag:[1.0]",
    "hardy": {"N": 512, "L": 50.0},
    "suites": ["hardy-convergence", "herglotz"]
  })", true);
  const VerificationReport rep = run_verify(cfg);
  CHECK(rep.all_pass());  // skipped is not failed
  CHECK(rep.suites.size() == 2);
  const auto& hardy = rep.suites[0];
  CHECK(hardy.name == "hardy-convergence");
  CHECK(hardy.checks.empty());
  REQUIRE_FALSE(rep.skipped.empty());
  CHECK(rep.skipped[0].suite == "hardy-convergence");
  CHECK(rep.skipped[0].reason.find("calibrated") != std::string::npos);
}

TEST_CASE("report serialization carries the full check table") {
  const RunConfig cfg = star_config(R"(["inverse-formulas"])");
  const auto doc = run_verify(cfg).to_json();
  CHECK(doc.at("version") == "0.1.0");
  CHECK(doc.at("config_hash") == cfg.config_hash());
  CHECK(doc.at("environment").at("seed") == 1);
  REQUIRE(doc.at("suites").size() == 1);
  const auto& suite = doc.at("suites")[0];
  CHECK(suite.at("name") == "inverse-formulas");
  CHECK(suite.at("pass") == true);
  for (const auto& chk : suite.at("checks")) {
    CHECK(chk.contains("tag"));
    CHECK(chk.contains("residual"));
    CHECK(chk.contains("tol"));
    CHECK(chk.contains("pass"));
  }
  const std::string text = run_verify(cfg).to_text();
  CHECK(text.find("[PASS] inverse-formulas") != std::string::npos);
  CHECK(text.find("all suites passed") != std::string::npos);
}

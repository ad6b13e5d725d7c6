#include "tscat_tools/runconfig.hpp"

#include <cmath>
#include <string>

#include "doctest.h"
#include "tscat/errors.hpp"

using namespace tscat;
using tscat::tools::RunConfig;
using tscat::tools::parse_config;

TEST_CASE("a minimal configuration gets the documented defaults") {
  const RunConfig cfg = parse_config(R"({"model": {"kind": "star_graph", "n": 2}})", true);
  CHECK(cfg.ext.dim() == 2);
  CHECK(cfg.ext.alpha_is_sqrt2_identity());
  CHECK(cfg.ext.kappa().max_norm() == 0.0);
  CHECK(cfg.k_grid.min == 0.1);
  CHECK(cfg.k_grid.max == 10.0);
  CHECK(cfg.k_grid.count == 40);
  CHECK_FALSE(cfg.k_grid.log_spacing);
  CHECK_FALSE(cfg.hardy.has_value());
  CHECK(cfg.suites == tools::all_suite_names());
  CHECK(cfg.output.dir == ".");
  CHECK(cfg.output.csv);
  CHECK(cfg.output.json);
}

TEST_CASE("kappa presets expand to the matrices they name") {
  const RunConfig zero =
      parse_config(R"({"model": {"kind": "star_graph", "n": 3}, "kappa": "zero"})", true);
  CHECK(zero.ext.kappa().max_norm() == 0.0);

  const RunConfig ii =
      parse_config(R"({"model": {"kind": "star_graph", "n": 2}, "kappa": "iI"})", true);
  CHECK(ii.ext.kappa()(0, 0) == cplx(0.0, 1.0));
  CHECK(ii.ext.kappa()(1, 1) == cplx(0.0, 1.0));
  CHECK(ii.ext.kappa()(0, 1) == cplx(0.0, 0.0));
  CHECK_FALSE(ii.ext.kappa_is_hermitian());

  const RunConfig dg = parse_config(
      R"({"model": {"kind": "star_graph", "n": 2}, "kappa": "diag:[1.5, [0.0, 2.0]]"})", true);
  CHECK(dg.ext.kappa()(0, 0) == cplx(1.5, 0.0));
  CHECK(dg.ext.kappa()(1, 1) == cplx(0.0, 2.0));
  CHECK(dg.ext.kappa()(1, 0) == cplx(0.0, 0.0));
}

TEST_CASE("matrix entries accept plain numbers and [re, im] pairs") {
  const RunConfig cfg = parse_config(
      R"({"model": {"kind": "star_graph", "n": 2},
          "kappa": [[0.5, [0.0, -1.0]], [[0.0, 1.0], 2.0]]})",
      true);
  CHECK(cfg.ext.kappa()(0, 1) == cplx(0.0, -1.0));
  CHECK(cfg.ext.kappa()(1, 0) == cplx(0.0, 1.0));
  CHECK(cfg.ext.kappa_is_hermitian());
}

TEST_CASE("the configuration hash ignores formatting but not content") {
  const std::string compact = R"({"model":{"kind":"star_graph","n":2},"kappa":"zero"})";
  const std::string airy = R"({
    "kappa": [[0.0, 0.0], [0.0, 0.0]],
    "model": {"n": 2, "kind": "star_graph"}
  })";
  const RunConfig a = parse_config(compact, true);
  const RunConfig b = parse_config(airy, true);
  CHECK(a.config_hash() == b.config_hash());

  const RunConfig c =
      parse_config(R"({"model": {"kind": "star_graph", "n": 2}, "kappa": "iI"})", true);
  CHECK(a.config_hash() != c.config_hash());
}

TEST_CASE("structural mistakes are rejected with ConfigError") {
  const auto bad = [](const std::string& text) {
    CHECK_THROWS_AS((void)parse_config(text, true), ConfigError);
  };
  bad(R"({})");                                                   // no model
  bad(R"({"model": {"kind": "moebius"}})");                       // unknown kind
  bad(R"({"model": {"kind": "star_graph", "n": 0}})");            // n < 1
  bad(R"({"model": {"kind": "interval", "length": -2.0}})");      // length <= 0
  bad(R"({"model": {"kind": "star_graph", "n": 2}, "kappa": [[0.0, 1.0]]})");  // not square
  bad(R"({"model": {"kind": "star_graph", "n": 3}, "kappa": [[1.0]]})");       // wrong dim
  bad(R"({"model": {"kind": "star_graph", "n": 1}, "k_grid": {"count": 0}})");
  bad(R"({"model": {"kind": "star_graph", "n": 1}, "k_grid": {"min": 2.0, "max": 1.0}})");
  bad(R"({"model": {"kind": "star_graph", "n": 1}, "k_grid": {"min": -1.0}})");
  bad(R"({"model": {"kind": "star_graph", "n": 1}, "hardy": {"N": 1000, "L": 50.0}})");
  bad(R"({"model": {"kind": "star_graph", "n": 1}, "hardy": {"N": 128, "L": 50.0}})");
  bad(R"({"model": {"kind": "star_graph", "n": 1}, "suites": "herglotz"})");
  bad(R"({"model": {"kind": "star_graph", "n": 1}, "output": {"formats": ["yaml"]}})");
  bad(R"(not json at all)");
}

TEST_CASE("unknown fields fail strict parses and survive lenient ones") {
  const std::string text = R"({"model": {"kind": "star_graph", "n": 1}, "kapa": "zero"})";
  CHECK_THROWS_AS((void)parse_config(text, true), ConfigError);
  CHECK_NOTHROW((void)parse_config(text, false));
}

TEST_CASE("momentum grids hit their endpoints under both spacings") {
  RunConfig lin = parse_config(
      R"({"model": {"kind": "star_graph", "n": 1},
          "k_grid": {"min": 0.5, "max": 4.5, "count": 5}})",
      true);
  const auto pts = lin.k_grid.points();
  REQUIRE(pts.size() == 5);
  CHECK(pts.front() == 0.5);
  CHECK(pts.back() == 4.5);
  CHECK(pts[2] == doctest::Approx(2.5));

  RunConfig lg = parse_config(
      R"({"model": {"kind": "star_graph", "n": 1},
          "k_grid": {"min": 0.1, "max": 10.0, "count": 3, "spacing": "log"}})",
      true);
  const auto lpts = lg.k_grid.points();
  REQUIRE(lpts.size() == 3);
  CHECK(lpts.front() == doctest::Approx(0.1));
  CHECK(lpts[1] == doctest::Approx(1.0));
  CHECK(lpts.back() == doctest::Approx(10.0));

  RunConfig one = parse_config(
      R"({"model": {"kind": "star_graph", "n": 1}, "k_grid": {"min": 2.0, "max": 9.0, "count": 1}})",
      true);
  CHECK(one.k_grid.points() == std::vector<double>{2.0});
}

TEST_CASE("lead_rational models parse and normalize into the hash") {
  const std::string text = R"({
    "model": {
      "kind": "lead_rational",
      "w": [[1.0]],
      "v": [[0.25]],
      "poles": [{"lambda": -2.0, "a": [[0.5]]}]
    }
  })";
  const RunConfig cfg = parse_config(text, true);
  CHECK(cfg.ext.dim() == 1);
  // same model, keys permuted
  const std::string permuted = R"({
    "model": {
      "poles": [{"a": [[0.5]], "lambda": -2.0}],
      "v": [[0.25]],
      "w": [[1.0]],
      "kind": "lead_rational"
    }
  })";
  CHECK(parse_config(permuted, true).config_hash() == cfg.config_hash());
}

TEST_CASE("output formats narrow to the requested subset") {
  const RunConfig cfg = parse_config(
      R"({"model": {"kind": "star_graph", "n": 1}, "output": {"dir": "/tmp/x", "formats": ["csv"]}})",
      true);
  CHECK(cfg.output.dir == "/tmp/x");
  CHECK(cfg.output.csv);
  CHECK_FALSE(cfg.output.json);
}

TEST_CASE("the published schema is valid JSON and lists every suite") {
  const auto doc = nlohmann::json::parse(tools::config_schema());
  CHECK(doc.contains("model"));
  CHECK(doc.contains("alpha"));
  CHECK(doc.contains("kappa"));
  CHECK(doc.contains("k_grid"));
  CHECK(doc.contains("hardy"));
  CHECK(doc.contains("output"));
  REQUIRE(doc.contains("suites"));
  CHECK(doc["suites"].size() == tools::all_suite_names().size());
}

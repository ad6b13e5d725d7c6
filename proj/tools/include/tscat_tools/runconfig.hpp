#ifndef TSCAT_TOOLS_RUNCONFIG_HPP
#define TSCAT_TOOLS_RUNCONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tscat/weyl.hpp"

namespace tscat::tools {

using ordered_json = nlohmann::ordered_json;

/// Momentum samples for the curve-style commands.  Evaluators that live on
/// the spectral cut (scattering matrix, boundary weight) run at the energy
/// k^2; the momentum is what lands in the "k" column of the outputs.
struct KGridSpec {
  double min = 0.1;
  double max = 10.0;
  int count = 40;
  bool log_spacing = false;
  std::vector<double> points() const;
};

struct HardySpec {
  int n = 4096;
  double l = 50.0;
};

struct OutputSpec {
  std::string dir = ".";
  bool csv = true;
  bool json = true;
};

/// Everything a run needs, parsed and validated up front.  `canonical` is the
/// normalized echo of the configuration (fixed key order, presets expanded),
/// so equal runs hash equal regardless of input formatting.
struct RunConfig {
  HerglotzModel model;
  ExtensionParams ext;
  KGridSpec k_grid;
  std::optional<HardySpec> hardy;
  std::vector<std::string> suites;
  OutputSpec output;
  ordered_json canonical;

  RunConfig(HerglotzModel m, ExtensionParams e) : model(std::move(m)), ext(std::move(e)) {}

  std::string config_hash() const;
};

/// Parse a configuration document.  Unknown fields are an error in strict
/// mode and a warning otherwise; structural problems (wrong dimension, bad
/// preset, non-Hermitian pole residue) are errors regardless.
RunConfig parse_config(const std::string& text, bool strict);

RunConfig load_config(const std::string& path, bool strict);

/// The accepted document shape, as a JSON description suitable for printing.
std::string config_schema();

/// FNV-1a 64-bit, as a fixed-width hex string.
std::string fnv1a_hex(std::string_view data);

/// matrix as nested rows of [re, im] pairs, the wire format used throughout
ordered_json matrix_json(const CMatrix& m);

/// Names of every verification suite, in report order.  Configurations that
/// omit "suites" get the full set.
const std::vector<std::string>& all_suite_names();

}  // namespace tscat::tools

#endif

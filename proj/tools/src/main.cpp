#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "tscat/corpus.hpp"
#include "tscat/errors.hpp"
#include "tscat/scatter.hpp"
#include "tscat_tools/modelvec_json.hpp"
#include "tscat_tools/probes.hpp"
#include "tscat_tools/runconfig.hpp"
#include "tscat_tools/verify.hpp"

namespace {

using namespace tscat;
using namespace tscat::tools;

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_threshold() {
  static const LogLevel lvl = [] {
    const char* env = std::getenv("TRIPLE_SCATTER_LOG");
    const std::string s = env ? env : "warn";
    if (s == "error") return LogLevel::Error;
    if (s == "info") return LogLevel::Info;
    if (s == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
  }();
  return lvl;
}

void logf(LogLevel lvl, const char* fmt, ...) {
  if (lvl > log_threshold()) return;
  const char* names[] = {"error", "warn", "info", "debug"};
  std::fprintf(stderr, "[triple-scatter %s] ", names[static_cast<int>(lvl)]);
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  logf(LogLevel::Info, "wrote %s", path.string().c_str());
}

std::filesystem::path output_dir(const RunConfig& cfg, const std::string& override_dir) {
  const std::filesystem::path dir = override_dir.empty() ? cfg.output.dir : override_dir;
  std::filesystem::create_directories(dir);
  return dir;
}

ordered_json curve_json(const RunConfig& cfg, const ScatteringCurve& curve) {
  ordered_json doc;
  doc["version"] = "0.1.0";
  doc["config_hash"] = cfg.config_hash();
  doc["dim"] = curve.dim;
  ordered_json rows = ordered_json::array();
  for (const ScatterSample& s : curve.samples) {
    ordered_json row;
    row["k"] = s.k;
    if (s.skipped) {
      row["sigma"] = nullptr;
      row["weight"] = nullptr;
      row["unitarity_defect"] = nullptr;
    } else {
      row["sigma"] = matrix_json(s.sigma);
      row["weight"] = matrix_json(s.weight);
      row["unitarity_defect"] = s.unitarity_defect;
    }
    row["skipped"] = s.skipped;
    row["reason"] = s.reason;
    rows.push_back(std::move(row));
  }
  doc["samples"] = std::move(rows);
  return doc;
}

int cmd_scan(const std::string& config_path, const std::string& out_override, bool strict) {
  const RunConfig cfg = load_config(config_path, strict);
  if (!cfg.ext.alpha_is_sqrt2_identity())
    throw ConfigError(
        "scan requires alpha = \"sqrt2I\"; the scattering matrix is normalized against the "
        "canonical boundary weight");
  logf(LogLevel::Info, "scanning %d samples", cfg.k_grid.count);
  // The cut-side evaluators take the energy k^2; the outputs keep the momentum column.
  const std::vector<double> ks = cfg.k_grid.points();
  std::vector<double> energies(ks.size());
  std::transform(ks.begin(), ks.end(), energies.begin(), [](double k) { return k * k; });
  ScatteringCurve curve = scan(cfg.ext, cfg.model, energies);
  for (std::size_t i = 0; i < ks.size(); ++i) curve.samples[i].k = ks[i];
  const auto dir = output_dir(cfg, out_override);
  if (cfg.output.csv) write_text_file(dir / "scattering.csv", curve.to_csv());
  if (cfg.output.json)
    write_text_file(dir / "scattering.json", curve_json(cfg, curve).dump(2) + "\n");
  for (const ScatterSample& s : curve.samples)
    if (s.skipped) logf(LogLevel::Warn, "skipped k=%.17g: %s", s.k, s.reason.c_str());
  return curve.any_skipped() ? 2 : 0;
}

int cmd_verify(const std::string& config_path, const std::string& out_override,
               std::uint64_t seed, bool strict, bool corrupt) {
  const RunConfig cfg = load_config(config_path, strict);
  VerifyOptions opt;
  opt.seed = seed;
  opt.corrupt_kappa_sign = corrupt;
  if (corrupt) logf(LogLevel::Warn, "kappa sign corruption enabled; failures are expected");
  const VerificationReport rep = run_verify(cfg, opt);
  const auto dir = output_dir(cfg, out_override);
  write_text_file(dir / "report.json", rep.to_json().dump(2) + "\n");
  std::fputs(rep.to_text().c_str(), stdout);
  return rep.all_pass() ? 0 : 1;
}

int cmd_corpus(const std::string& config_path, const std::string& out_override, bool strict) {
  const RunConfig cfg = load_config(config_path, strict);
  const HardySpec hs = cfg.hardy.value_or(HardySpec{});
  const auto track = SymbolTrack::from_model(Grid::make(hs.n, hs.l), cfg.ext, cfg.model);
  const Grid& gr = track->grid();
  const int d = track->dim();

  std::vector<corpus::GaussianOpts> recipes;
  for (int c = 0; c < d; ++c) recipes.push_back({0.7 + 0.15 * c, 0.0, 6.0, 2, cplx(1.0, 0.0)});
  const VecField g = corpus::gaussian_field(gr, recipes);

  struct Member {
    const char* file;
    const char* description;
    ModelVector v;
  };
  const Member members[] = {
      {"near_axis_pair.json", "projected pair of near-axis rational fields",
       probes::near_axis_pair(track, probes::near_axis_gap)},
      {"smooth_kappa.json", "pointwise solution of the chi-weighted relation",
       corpus::make_smooth(track, g, true)},
      {"smooth_zero.json", "pointwise solution of the plain relation",
       corpus::make_smooth(track, g, false)},
      {"one_sided_defect.json", "pair whose gamma residual isolates one continuation",
       probes::one_sided_defect(track, probes::near_axis_gap)},
  };

  const auto dir = output_dir(cfg, out_override);
  ordered_json manifest;
  manifest["version"] = "0.1.0";
  manifest["config_hash"] = cfg.config_hash();
  manifest["grid"] = {{"N", gr.n()}, {"L", gr.l()}};
  ordered_json entries = ordered_json::array();
  for (const Member& m : members) {
    write_text_file(dir / m.file, write_model_vector(m.v));
    entries.push_back({{"file", m.file},
                       {"description", m.description},
                       {"plain_norm", m.v.plain_norm()},
                       {"k_defect_rel", k_membership_defect(m.v) / m.v.plain_norm()}});
  }
  manifest["members"] = std::move(entries);
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scattering toolkit for boundary extensions of Herglotz operator models"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 1;
  bool strict = false;
  bool corrupt = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file (JSON)")->required();
    sub->add_option("--out", out_dir, "output directory (overrides the configuration)");
    sub->add_option("--seed", seed, "seed for the drawn checks");
    sub->add_flag("--strict", strict, "reject unknown configuration fields");
  };

  CLI::App* sc = app.add_subcommand("scan", "sample the scattering matrix over the energy grid");
  add_common(sc);
  CLI::App* vf = app.add_subcommand("verify", "run the identity suites and write a report");
  add_common(vf);
  vf->add_flag("--debug-corrupt-kappa-sign", corrupt, "")->group("");
  CLI::App* cp = app.add_subcommand("corpus", "emit the deterministic model-space corpus");
  add_common(cp);
  CLI::App* sh = app.add_subcommand("schema", "print the configuration schema");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sh->parsed()) {
      std::fputs(config_schema().c_str(), stdout);
      return 0;
    }
    if (sc->parsed()) return cmd_scan(config_path, out_dir, strict);
    if (vf->parsed()) return cmd_verify(config_path, out_dir, seed, strict, corrupt);
    if (cp->parsed()) return cmd_corpus(config_path, out_dir, strict);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 1;
  } catch (const tscat::Error& e) {
    std::fprintf(stderr, "error [%s]: %s\n", e.code().c_str(), e.what());
    return 1;
  }
  return 0;
}

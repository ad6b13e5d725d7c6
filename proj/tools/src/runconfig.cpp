#include "tscat_tools/runconfig.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "tscat/errors.hpp"

namespace tscat::tools {

namespace {

void reject_unknown(const ordered_json& obj, const std::vector<std::string>& known,
                    const std::string& where, bool strict) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool ok = false;
    for (const auto& k : known) ok = ok || (k == key);
    if (ok) continue;
    const std::string msg = "unknown field \"" + key + "\" in " + where;
    if (strict) throw ConfigError(msg);
    std::fprintf(stderr, "[triple-scatter] warning: %s\n", msg.c_str());
  }
}

cplx parse_scalar(const ordered_json& j, const std::string& where) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx(j[0].get<double>(), j[1].get<double>());
  throw ConfigError(where + ": expected a number or an [re, im] pair");
}

CMatrix parse_matrix(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ConfigError(where + ": expected a nonempty array of rows");
  const int n = static_cast<int>(j.size());
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ConfigError(where + ": row " + std::to_string(r) + " must hold " + std::to_string(n) +
                        " entries (square matrix)");
    for (int c = 0; c < n; ++c)
      m(r, c) = parse_scalar(row[static_cast<size_t>(c)],
                             where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

CMatrix parse_kappa(const ordered_json& j, int dim) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "zero") return CMatrix(dim, dim);
    if (s == "iI") {
      CMatrix m(dim, dim);
      for (int i = 0; i < dim; ++i) m(i, i) = cplx(0.0, 1.0);
      return m;
    }
    if (s.rfind("diag:", 0) == 0) {
      ordered_json entries;
      try {
        entries = ordered_json::parse(s.substr(5));
      } catch (const nlohmann::json::exception&) {
        throw ConfigError("kappa: the diag preset needs a JSON array after \"diag:\"");
      }
      if (!entries.is_array() || static_cast<int>(entries.size()) != dim)
        throw ConfigError("kappa: diag preset must list exactly " + std::to_string(dim) +
                          " entries for this model");
      CMatrix m(dim, dim);
      for (int i = 0; i < dim; ++i)
        m(i, i) = parse_scalar(entries[static_cast<size_t>(i)], "kappa diag entry");
      return m;
    }
    throw ConfigError("kappa: unknown preset \"" + s + "\" (use \"zero\", \"iI\", or \"diag:[...]\")");
  }
  const CMatrix m = parse_matrix(j, "kappa");
  if (m.rows() != dim)
    throw ConfigError("kappa is " + std::to_string(m.rows()) + "x" + std::to_string(m.rows()) +
                      " but the model has dimension " + std::to_string(dim));
  return m;
}

CMatrix parse_alpha(const ordered_json& j, int dim) {
  if (j.is_string()) {
    if (j.get<std::string>() == "sqrt2I") {
      CMatrix m(dim, dim);
      for (int i = 0; i < dim; ++i) m(i, i) = cplx(std::sqrt(2.0), 0.0);
      return m;
    }
    throw ConfigError("alpha: unknown preset \"" + j.get<std::string>() + "\" (use \"sqrt2I\")");
  }
  const CMatrix m = parse_matrix(j, "alpha");
  if (m.rows() != dim)
    throw ConfigError("alpha is " + std::to_string(m.rows()) + "x" + std::to_string(m.rows()) +
                      " but the model has dimension " + std::to_string(dim));
  return m;
}

HerglotzModel parse_model(const ordered_json& j, bool strict, ordered_json& canon) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ConfigError("model: expected an object with a string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "star_graph") {
    reject_unknown(j, {"kind", "n"}, "model", strict);
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw ConfigError("model: star_graph needs an integer \"n\"");
    const int n = j["n"].get<int>();
    if (n < 1) throw ConfigError("model: star_graph needs n >= 1");
    canon = {{"kind", "star_graph"}, {"n", n}};
    return HerglotzModel::star_graph(n);
  }
  if (kind == "interval") {
    reject_unknown(j, {"kind", "length"}, "model", strict);
    if (!j.contains("length") || !j["length"].is_number())
      throw ConfigError("model: interval needs a positive \"length\"");
    const double len = j["length"].get<double>();
    if (!(len > 0.0)) throw ConfigError("model: interval needs a positive \"length\"");
    canon = {{"kind", "interval"}, {"length", len}};
    return HerglotzModel::interval(len);
  }
  if (kind == "lead_rational") {
    reject_unknown(j, {"kind", "w", "v", "poles"}, "model", strict);
    if (!j.contains("w") || !j.contains("v"))
      throw ConfigError("model: lead_rational needs matrices \"w\" and \"v\"");
    const CMatrix w = parse_matrix(j["w"], "model.w");
    const CMatrix v = parse_matrix(j["v"], "model.v");
    std::vector<LeadPole> poles;
    if (j.contains("poles")) {
      if (!j["poles"].is_array()) throw ConfigError("model.poles: expected an array");
      for (size_t i = 0; i < j["poles"].size(); ++i) {
        const auto& p = j["poles"][i];
        const std::string where = "model.poles[" + std::to_string(i) + "]";
        reject_unknown(p, {"lambda", "a"}, where, strict);
        if (!p.contains("lambda") || !p["lambda"].is_number() || !p.contains("a"))
          throw ConfigError(where + ": expected {\"lambda\": real, \"a\": matrix}");
        poles.push_back({p["lambda"].get<double>(), parse_matrix(p["a"], where + ".a")});
      }
    }
    canon = {{"kind", "lead_rational"}, {"w", matrix_json(w)}, {"v", matrix_json(v)}};
    ordered_json pj = ordered_json::array();
    for (const auto& p : poles)
      pj.push_back({{"lambda", p.lambda}, {"a", matrix_json(p.a)}});
    canon["poles"] = std::move(pj);
    try {
      return HerglotzModel::lead_rational(w, v, std::move(poles));
    } catch (const Error& e) {
      throw ConfigError(std::string("model: ") + e.what());
    }
  }
  throw ConfigError("model: unknown kind \"" + kind +
                    "\" (use \"star_graph\", \"lead_rational\", or \"interval\")");
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "herglotz",         "cayley",           "theta-identities", "inverse-formulas",
      "weight-identity",  "oracle-equivalence", "hardy-convergence", "gamma-identity",
      "resolvent-identity", "scattering-maps"};
  return names;
}

ordered_json matrix_json(const CMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back(ordered_json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> KGridSpec::points() const {
  std::vector<double> ks;
  ks.reserve(static_cast<size_t>(count));
  if (count == 1) {
    ks.push_back(min);
    return ks;
  }
  if (log_spacing) {
    const double lo = std::log(min), hi = std::log(max);
    for (int i = 0; i < count; ++i)
      ks.push_back(std::exp(lo + (hi - lo) * i / (count - 1)));
  } else {
    for (int i = 0; i < count; ++i) ks.push_back(min + (max - min) * i / (count - 1));
  }
  return ks;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (const char ch : data) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string RunConfig::config_hash() const { return fnv1a_hex(canonical.dump()); }

RunConfig parse_config(const std::string& text, bool strict) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  reject_unknown(j, {"model", "alpha", "kappa", "hardy", "k_grid", "suites", "output"},
                 "configuration", strict);
  if (!j.contains("model")) throw ConfigError("configuration needs a \"model\"");

  ordered_json model_canon;
  HerglotzModel model = parse_model(j["model"], strict, model_canon);
  const int dim = model.dim();
  const CMatrix alpha = j.contains("alpha") ? parse_alpha(j["alpha"], dim) : [&] {
    CMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m(i, i) = cplx(std::sqrt(2.0), 0.0);
    return m;
  }();
  const CMatrix kappa = j.contains("kappa") ? parse_kappa(j["kappa"], dim) : CMatrix(dim, dim);

  RunConfig cfg{std::move(model), [&] {
                  try {
                    return ExtensionParams(alpha, kappa);
                  } catch (const Error& e) {
                    throw ConfigError(std::string("extension parameters: ") + e.what());
                  }
                }()};

  if (j.contains("k_grid")) {
    const auto& g = j["k_grid"];
    reject_unknown(g, {"min", "max", "count", "spacing"}, "k_grid", strict);
    if (g.contains("min")) cfg.k_grid.min = g["min"].get<double>();
    if (g.contains("max")) cfg.k_grid.max = g["max"].get<double>();
    if (g.contains("count")) cfg.k_grid.count = g["count"].get<int>();
    if (g.contains("spacing")) {
      const std::string s = g["spacing"].get<std::string>();
      if (s != "linear" && s != "log")
        throw ConfigError("k_grid.spacing must be \"linear\" or \"log\"");
      cfg.k_grid.log_spacing = (s == "log");
    }
    if (cfg.k_grid.count < 1) throw ConfigError("k_grid.count must be at least 1");
    if (!(cfg.k_grid.max >= cfg.k_grid.min)) throw ConfigError("k_grid needs max >= min");
    if (!(cfg.k_grid.min > 0.0)) throw ConfigError("k_grid.min must be a positive momentum");
  }

  if (j.contains("hardy") && !j["hardy"].is_null()) {
    const auto& h = j["hardy"];
    reject_unknown(h, {"N", "L"}, "hardy", strict);
    HardySpec hs;
    if (h.contains("N")) hs.n = h["N"].get<int>();
    if (h.contains("L")) hs.l = h["L"].get<double>();
    if (hs.n < 256 || (hs.n & (hs.n - 1)) != 0)
      throw ConfigError("hardy.N must be a power of two, at least 256");
    if (!(hs.l > 0.0)) throw ConfigError("hardy.L must be positive");
    cfg.hardy = hs;
  }

  if (j.contains("suites")) {
    if (!j["suites"].is_array()) throw ConfigError("suites must be an array of names");
    for (const auto& s : j["suites"]) {
      if (!s.is_string()) throw ConfigError("suites must be an array of names");
      cfg.suites.push_back(s.get<std::string>());
    }
  } else {
    cfg.suites = all_suite_names();
  }

  if (j.contains("output")) {
    const auto& o = j["output"];
    reject_unknown(o, {"dir", "formats"}, "output", strict);
    if (o.contains("dir")) cfg.output.dir = o["dir"].get<std::string>();
    if (o.contains("formats")) {
      cfg.output.csv = cfg.output.json = false;
      for (const auto& f : o["formats"]) {
        const std::string s = f.get<std::string>();
        if (s == "csv")
          cfg.output.csv = true;
        else if (s == "json")
          cfg.output.json = true;
        else
          throw ConfigError("output.formats entries must be \"csv\" or \"json\"");
      }
    }
  }

  // normalized echo: presets expanded, keys in one fixed order
  ordered_json canon;
  canon["model"] = std::move(model_canon);
  canon["alpha"] = matrix_json(cfg.ext.alpha());
  canon["kappa"] = matrix_json(cfg.ext.kappa());
  canon["k_grid"] = {{"min", cfg.k_grid.min},
                     {"max", cfg.k_grid.max},
                     {"count", cfg.k_grid.count},
                     {"spacing", cfg.k_grid.log_spacing ? "log" : "linear"}};
  if (cfg.hardy)
    canon["hardy"] = {{"N", cfg.hardy->n}, {"L", cfg.hardy->l}};
  else
    canon["hardy"] = nullptr;
  canon["suites"] = cfg.suites;
  canon["output"] = {{"dir", cfg.output.dir}};
  cfg.canonical = std::move(canon);
  return cfg;
}

RunConfig load_config(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), strict);
}

std::string config_schema() {
  ordered_json s;
  s["model"] = {
      {"kind", "star_graph | lead_rational | interval"},
      {"n", "star_graph: number of half-lines, integer >= 1"},
      {"length", "interval: positive length"},
      {"w", "lead_rational: Hermitian PSD matrix, rows of [re, im] pairs"},
      {"v", "lead_rational: Hermitian matrix"},
      {"poles", "lead_rational: array of {lambda: real, a: Hermitian PSD matrix}"},
  };
  s["alpha"] = "\"sqrt2I\" or a Hermitian positive matrix as rows of [re, im] pairs";
  s["kappa"] = "\"zero\" | \"iI\" | \"diag:[...]\" or a square matrix as rows of [re, im] pairs";
  s["k_grid"] = {{"min", "positive real"},
                 {"max", ">= min"},
                 {"count", "integer >= 1"},
                 {"spacing", "linear | log"}};
  s["hardy"] = {{"N", "power of two, >= 256"}, {"L", "positive half-width"}};
  s["suites"] = all_suite_names();
  s["output"] = {{"dir", "output directory"}, {"formats", "subset of [csv, json]"}};
  return s.dump(2) + "\n";
}

}  // namespace tscat::tools

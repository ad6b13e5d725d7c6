#include "tscat_tools/modelvec_json.hpp"

#include <cmath>

#include "tscat/errors.hpp"

namespace tscat::tools {

ordered_json model_vector_to_json(const ModelVector& v) {
  const Grid& gr = v.track->grid();
  ordered_json doc;
  doc["version"] = "0.1.0";
  doc["grid"] = {{"N", gr.n()}, {"L", gr.l()}};
  doc["dim"] = v.gt.dim();
  ordered_json comps = ordered_json::array();
  for (int c = 0; c < v.gt.dim(); ++c) {
    ordered_json rows = ordered_json::array();
    for (int j = 0; j < gr.n(); ++j) {
      const cplx gt = v.gt.at(c, j), g = v.g.at(c, j);
      rows.push_back(ordered_json::array({gr.x(j), gt.real(), gt.imag(), g.real(), g.imag()}));
    }
    comps.push_back(std::move(rows));
  }
  doc["components"] = std::move(comps);
  return doc;
}

ModelVector model_vector_from_json(const ordered_json& doc,
                                   std::shared_ptr<const SymbolTrack> track) {
  if (!doc.is_object() || !doc.contains("grid") || !doc.contains("components"))
    throw ConfigError("model vector document needs \"grid\" and \"components\"");
  const Grid& gr = track->grid();
  const auto& gj = doc["grid"];
  if (!gj.contains("N") || !gj.contains("L") || gj["N"].get<int>() != gr.n() ||
      gj["L"].get<double>() != gr.l())
    throw ConfigError("model vector grid (" + gj.dump() + ") does not match the track grid (N=" +
                      std::to_string(gr.n()) + ", L=" + std::to_string(gr.l()) + ")");
  const auto& comps = doc["components"];
  if (!comps.is_array() || comps.empty())
    throw ConfigError("model vector document needs a nonempty \"components\" array");
  const int dim = static_cast<int>(comps.size());
  if (doc.contains("dim") && doc["dim"].get<int>() != dim)
    throw ConfigError("model vector \"dim\" disagrees with the component count");
  if (dim != track->dim())
    throw ConfigError("model vector has " + std::to_string(dim) +
                      " components but the track has dimension " + std::to_string(track->dim()));

  ModelVector v{track, VecField(gr, dim), VecField(gr, dim), std::nullopt};
  for (int c = 0; c < dim; ++c) {
    const auto& rows = comps[static_cast<size_t>(c)];
    if (!rows.is_array() || static_cast<int>(rows.size()) != gr.n())
      throw ConfigError("component " + std::to_string(c) + " must hold " + std::to_string(gr.n()) +
                        " samples");
    for (int j = 0; j < gr.n(); ++j) {
      const auto& row = rows[static_cast<size_t>(j)];
      if (!row.is_array() || row.size() != 5)
        throw ConfigError("component " + std::to_string(c) + " sample " + std::to_string(j) +
                          ": expected [x, re_gt, im_gt, re_g, im_g]");
      const double x = row[0].get<double>();
      if (std::abs(x - gr.x(j)) > 1e-12 * (1.0 + std::abs(gr.x(j))))
        throw ConfigError("component " + std::to_string(c) + " sample " + std::to_string(j) +
                          ": abscissa " + std::to_string(x) + " is off the track grid");
      v.gt.at(c, j) = cplx(row[1].get<double>(), row[2].get<double>());
      v.g.at(c, j) = cplx(row[3].get<double>(), row[4].get<double>());
    }
  }
  return v;
}

std::string write_model_vector(const ModelVector& v) {
  return model_vector_to_json(v).dump() + "\n";
}

ModelVector read_model_vector(const std::string& text,
                              std::shared_ptr<const SymbolTrack> track) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("model vector document is not valid JSON: ") + e.what());
  }
  return model_vector_from_json(doc, std::move(track));
}

}  // namespace tscat::tools

#ifndef TSCAT_TOOLS_MODELVEC_JSON_HPP
#define TSCAT_TOOLS_MODELVEC_JSON_HPP

#include <memory>
#include <string>

#include "json.hpp"
#include "tscat/hardy.hpp"

namespace tscat::tools {

using ordered_json = nlohmann::ordered_json;

/// Model-space vector as a JSON document: grid header plus one sample table
/// per component, each row (x, Re gt, Im gt, Re g, Im g).  The source
/// representative is not serialized; importing a projected vector yields a
/// plain data vector.
ordered_json model_vector_to_json(const ModelVector& v);

/// Inverse of model_vector_to_json onto an existing track.  The document's
/// grid header and sample abscissae must match the track's grid exactly;
/// mismatches and malformed rows throw ConfigError.
ModelVector model_vector_from_json(const ordered_json& doc,
                                   std::shared_ptr<const SymbolTrack> track);

std::string write_model_vector(const ModelVector& v);
ModelVector read_model_vector(const std::string& text,
                              std::shared_ptr<const SymbolTrack> track);

}  // namespace tscat::tools

#endif

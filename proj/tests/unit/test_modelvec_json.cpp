#include "tscat_tools/modelvec_json.hpp"

#include <string>

#include "doctest.h"
#include "tscat/corpus.hpp"
#include "tscat/errors.hpp"
#include "tscat/hardy.hpp"

using namespace tscat;
using namespace tscat::tools;

namespace {

std::shared_ptr<const SymbolTrack> small_track(int n, double l, int dim) {
  std::vector<cplx> diag(static_cast<size_t>(dim));
  for (int c = 0; c < dim; ++c) diag[static_cast<size_t>(c)] = cplx(1.0 + 0.5 * c, 0.0);
  const auto ext = ExtensionParams::with_sqrt2_alpha(CMatrix::diag(diag));
  return SymbolTrack::from_model(Grid::make(n, l), ext, HerglotzModel::star_graph(dim));
}

ModelVector sample_vector(const std::shared_ptr<const SymbolTrack>& tr) {
  std::vector<corpus::GaussianOpts> recipes;
  for (int c = 0; c < tr->dim(); ++c) recipes.push_back({0.6 + 0.2 * c, 0.0, 5.0, 2, cplx(1.0, 0.0)});
  return corpus::make_smooth(tr, corpus::gaussian_field(tr->grid(), recipes), true);
}

}  // namespace

TEST_CASE("model vectors survive a JSON round trip bit for bit") {
  const auto tr = small_track(256, 10.0, 2);
  const ModelVector v = sample_vector(tr);
  const ModelVector back = model_vector_from_json(model_vector_to_json(v), tr);
  CHECK((back.gt - v.gt).norm() == 0.0);
  CHECK((back.g - v.g).norm() == 0.0);
}

TEST_CASE("the serialized document records grid and dimension") {
  const auto tr = small_track(256, 10.0, 1);
  const auto doc = model_vector_to_json(sample_vector(tr));
  CHECK(doc.at("grid").at("N") == 256);
  CHECK(doc.at("grid").at("L") == 10.0);
  CHECK(doc.at("dim") == 1);
  CHECK(doc.at("components").size() == 1);
  CHECK(doc.at("components")[0].size() == 256);
}

TEST_CASE("imports reject a mismatched grid") {
  const auto tr = small_track(256, 10.0, 1);
  const auto other = small_track(512, 10.0, 1);
  const auto doc = model_vector_to_json(sample_vector(tr));
  CHECK_THROWS_AS((void)model_vector_from_json(doc, other), ConfigError);
}

TEST_CASE("imports reject a mismatched dimension") {
  const auto tr1 = small_track(256, 10.0, 1);
  const auto tr2 = small_track(256, 10.0, 2);
  const auto doc = model_vector_to_json(sample_vector(tr1));
  CHECK_THROWS_AS((void)model_vector_from_json(doc, tr2), ConfigError);
}

TEST_CASE("imports reject rows whose abscissa drifted") {
  const auto tr = small_track(256, 10.0, 1);
  auto doc = model_vector_to_json(sample_vector(tr));
  doc["components"][0][7][0] = doc["components"][0][7][0].get<double>() + 1e-6;
  CHECK_THROWS_AS((void)model_vector_from_json(doc, tr), ConfigError);
}

TEST_CASE("serialized text round trips through the reader") {
  const auto tr = small_track(256, 10.0, 1);
  const ModelVector v = sample_vector(tr);
  const std::string text = write_model_vector(v);
  CHECK(text.back() == '\n');
  const ModelVector back = read_model_vector(text, tr);
  CHECK((back.gt - v.gt).norm() == 0.0);
  CHECK((back.g - v.g).norm() == 0.0);
  CHECK_THROWS_AS((void)read_model_vector("not a document", tr), ConfigError);
}

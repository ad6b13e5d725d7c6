#include <benchmark/benchmark.h>

#include <random>

#include "tscat/chartheta.hpp"
#include "tscat/corpus.hpp"
#include "tscat/hardy.hpp"
#include "tscat/scatter.hpp"

using namespace tscat;

namespace {

CMatrix seeded_hermitian(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  CMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = cplx(d(gen), d(gen));
  return (a + a.adjoint()) * cplx(0.5, 0.0);
}

void bm_solve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CMatrix a = seeded_hermitian(n, 11) + CMatrix::scaled_identity(n, cplx(2.0 * n, 0.0));
  const CMatrix b = seeded_hermitian(n, 12);
  for (auto _ : state) benchmark::DoNotOptimize(solve(a, b));
}
BENCHMARK(bm_solve)->Arg(4)->Arg(8)->Arg(16);

void bm_char_function(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ext = ExtensionParams::with_sqrt2_alpha(seeded_hermitian(n, 21));
  const HerglotzModel model = HerglotzModel::star_graph(n);
  const cplx z(0.7, 1.3);
  for (auto _ : state) benchmark::DoNotOptimize(char_function(ext, model, z));
}
BENCHMARK(bm_char_function)->Arg(2)->Arg(5);

void bm_resolvent_style_inverses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ext = ExtensionParams::with_sqrt2_alpha(seeded_hermitian(n, 31));
  const HerglotzModel model = HerglotzModel::star_graph(n);
  const cplx z(-0.4, 2.1);
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_style_inverses(ext, model, z));
}
BENCHMARK(bm_resolvent_style_inverses)->Arg(2)->Arg(5);

void bm_riesz_project(benchmark::State& state) {
  const Grid gr = Grid::make(static_cast<int>(state.range(0)), 50.0);
  const VecField f = corpus::gaussian_field(gr, {{0.6, 0.0, 6.0, 2, cplx(1.0, 0.0)}});
  for (auto _ : state) benchmark::DoNotOptimize(riesz_project(f, Sign::Plus));
}
BENCHMARK(bm_riesz_project)->Arg(4096)->Arg(8192);

void bm_track_from_model(benchmark::State& state) {
  const auto ext = ExtensionParams::with_sqrt2_alpha(CMatrix::diag({cplx(1.0, 0.0)}));
  const HerglotzModel model = HerglotzModel::star_graph(1);
  const Grid gr = Grid::make(static_cast<int>(state.range(0)), 50.0);
  for (auto _ : state) benchmark::DoNotOptimize(SymbolTrack::from_model(gr, ext, model));
}
BENCHMARK(bm_track_from_model)->Arg(4096)->Arg(8192);

void bm_project_k(benchmark::State& state) {
  const auto ext = ExtensionParams::with_sqrt2_alpha(CMatrix::diag({cplx(1.0, 0.0)}));
  const auto tr = SymbolTrack::from_model(Grid::make(static_cast<int>(state.range(0)), 50.0),
                                          ext, HerglotzModel::star_graph(1));
  const Grid& gr = tr->grid();
  const ModelVector v = corpus::make_smooth(
      tr, corpus::gaussian_field(gr, {{0.6, 0.0, 6.0, 2, cplx(1.0, 0.0)}}), true);
  for (auto _ : state) benchmark::DoNotOptimize(project_K(v));
}
BENCHMARK(bm_project_k)->Arg(4096)->Arg(8192);

void bm_model_resolvent(benchmark::State& state) {
  const auto ext = ExtensionParams::with_sqrt2_alpha(CMatrix::diag({cplx(1.0, 0.0)}));
  const auto tr = SymbolTrack::from_model(Grid::make(4096, 50.0), ext,
                                          HerglotzModel::star_graph(1));
  const ModelVector v = project_K(corpus::make_smooth(
      tr, corpus::gaussian_field(tr->grid(), {{0.6, 0.0, 6.0, 2, cplx(1.0, 0.0)}}), true));
  const cplx z(-0.5, -1.2);
  for (auto _ : state) benchmark::DoNotOptimize(model_resolvent(v, z));
}
BENCHMARK(bm_model_resolvent);

void bm_scan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ext = ExtensionParams::with_sqrt2_alpha(seeded_hermitian(n, 41));
  const HerglotzModel model = HerglotzModel::star_graph(n);
  std::vector<double> energies(40);
  for (int i = 0; i < 40; ++i) {
    const double k = 0.1 + (10.0 - 0.1) * i / 39.0;
    energies[static_cast<size_t>(i)] = k * k;
  }
  for (auto _ : state) benchmark::DoNotOptimize(scan(ext, model, energies));
}
BENCHMARK(bm_scan)->Arg(2)->Arg(5);

}  // namespace

BENCHMARK_MAIN();

#include "tscat/corpus.hpp"

#include <cmath>
#include <random>
#include <utility>

#include "tscat/errors.hpp"
#include "tscat/matrix.hpp"

namespace tscat::corpus {

VecField rational_hardy(const Grid& grid, int dim, Sign cls, std::uint64_t seed,
                        const RationalOpts& opts) {
  if (opts.n_poles < 1 || opts.zero_order < 0 || opts.zero_order >= opts.n_poles)
    throw Precondition("rational field needs 0 <= zero_order < n_poles");
  if (!(opts.min_im > 0.0) || opts.max_im < opts.min_im)
    throw Precondition("rational field pole band is empty or touches the axis");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-opts.max_re, opts.max_re);
  std::uniform_real_distribution<double> im(opts.min_im, opts.max_im);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.14159265358979323846);
  // Sign::Plus fields are analytic above the axis, so their poles go below.
  const double side = (cls == Sign::Plus) ? -1.0 : 1.0;
  VecField out(grid, dim);
  std::vector<cplx> poles(static_cast<size_t>(opts.n_poles));
  for (int c = 0; c < dim; ++c) {
    for (auto& p : poles) p = cplx(re(rng), side * im(rng));
    const cplx amp = opts.amplitude * std::exp(cplx(0.0, phase(rng)));
    for (int j = 0; j < grid.n(); ++j) {
      const double x = grid.x(j);
      cplx val = amp;
      for (int m = 0; m < opts.zero_order; ++m) val *= x;
      for (const auto& p : poles) val /= (cplx(x, 0.0) - p);
      out.at(c, j) = val;
    }
  }
  return out;
}

VecField gaussian_field(const Grid& grid, const std::vector<GaussianOpts>& recipes) {
  if (recipes.empty()) throw Precondition("gaussian field needs at least one recipe");
  VecField out(grid, static_cast<int>(recipes.size()));
  for (int c = 0; c < out.dim(); ++c) {
    const GaussianOpts& r = recipes[static_cast<size_t>(c)];
    if (!(r.width > 0.0)) throw Precondition("gaussian width must be positive");
    for (int j = 0; j < grid.n(); ++j) {
      const double x = grid.x(j);
      const double t = (x - r.center) / r.width;
      cplx val = r.amplitude * std::exp(cplx(-t * t, r.omega * x));
      for (int m = 0; m < r.zero_order; ++m) val *= x;
      out.at(c, j) = val;
    }
  }
  return out;
}

ModelVector make_in_k(std::shared_ptr<const SymbolTrack> track, const VecField& h_plus,
                      const VecField& h_minus) {
  if (!track) throw Precondition("make_in_k needs a track");
  if (track->sup_op_norm() >= 1.0 - 1e-6)
    throw Precondition("make_in_k needs a strictly contractive track");
  const Grid& gr = track->grid();
  const int n = track->dim();
  if (!(h_plus.grid() == gr) || !(h_minus.grid() == gr) || h_plus.dim() != n ||
      h_minus.dim() != n)
    throw BadShape("hardy inputs do not match the track");
  VecField g(gr, n);
  VecField gt(gr, n);
  std::vector<cplx> hp(static_cast<size_t>(n)), hm(static_cast<size_t>(n));
  for (int j = 0; j < gr.n(); ++j) {
    const CMatrix& s = track->value(j);
    const CMatrix id = CMatrix::identity(n);
    for (int i = 0; i < n; ++i) {
      hp[static_cast<size_t>(i)] = h_plus.at(i, j);
      hm[static_cast<size_t>(i)] = h_minus.at(i, j);
    }
    const auto shm = s.apply(hm);
    CMatrix rhs(n, 1);
    for (int i = 0; i < n; ++i) rhs(i, 0) = hp[static_cast<size_t>(i)] - shm[static_cast<size_t>(i)];
    const CMatrix gcol = solve(id - s * s.adjoint(), rhs);
    std::vector<cplx> gvec(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) gvec[static_cast<size_t>(i)] = gcol(i, 0);
    const auto sg = s.adjoint().apply(gvec);
    for (int i = 0; i < n; ++i) {
      g.at(i, j) = gvec[static_cast<size_t>(i)];
      gt.at(i, j) = hm[static_cast<size_t>(i)] - sg[static_cast<size_t>(i)];
    }
  }
  return ModelVector{std::move(track), std::move(gt), std::move(g), std::nullopt};
}

ModelVector make_smooth(std::shared_ptr<const SymbolTrack> track, const VecField& g,
                        bool kappa_relation) {
  if (!track) throw Precondition("make_smooth needs a track");
  ModelVector seed{track, VecField(track->grid(), track->dim()), g, std::nullopt};
  MaskedResult res =
      wave_map(kappa_relation ? WaveKind::MinusToKappa : WaveKind::MinusToZero, seed);
  return ModelVector{std::move(track), res.v.source->gt, res.v.source->g, std::nullopt};
}

SmoothPair make_smooth_pair(std::shared_ptr<const SymbolTrack> track, const VecField& g) {
  SmoothPair pair{make_smooth(track, g, true), make_smooth(track, g, false)};
  return pair;
}

}  // namespace tscat::corpus

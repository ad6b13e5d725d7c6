#ifndef TSCAT_CORPUS_HPP
#define TSCAT_CORPUS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "tscat/grid.hpp"
#include "tscat/hardy.hpp"

namespace tscat::corpus {

struct RationalOpts {
  int n_poles = 4;
  /// numerator power of x; must stay below n_poles so the field decays
  int zero_order = 0;
  /// pole distance from the axis
  double min_im = 0.5;
  double max_im = 2.5;
  double max_re = 4.0;
  double amplitude = 1.0;
};

/// Random rational field with every pole on one side of the axis.  Sign::Plus
/// puts the poles in the lower half plane, so the field belongs to the plus
/// Hardy class; Sign::Minus mirrors them.  Decay is x^(zero_order - n_poles).
VecField rational_hardy(const Grid& grid, int dim, Sign cls, std::uint64_t seed,
                        const RationalOpts& opts = {});

struct GaussianOpts {
  /// carrier frequency
  double omega = 0.0;
  double center = 0.0;
  double width = 6.0;
  /// power of x multiplying the envelope
  int zero_order = 0;
  cplx amplitude = cplx(1.0, 0.0);
};

/// amplitude x^zero_order e^{i omega x} e^{-((x - center)/width)^2}, one
/// recipe per component.
VecField gaussian_field(const Grid& grid, const std::vector<GaussianOpts>& recipes);

/// Exact K element on a strictly contractive track, by the pointwise solve
/// g = (I - S S*)^{-1} (h_plus - S h_minus), gt = h_minus - S* g.  The two
/// inputs become the defect combinations gt + S* g and S gt + g, so the pair
/// sits in K up to grid leak.  Unimodular points make the solve blow up;
/// the track must satisfy sup ||S|| < 1.
ModelVector make_in_k(std::shared_ptr<const SymbolTrack> track, const VecField& h_plus,
                      const VecField& h_minus);

/// Pointwise-smooth raw pair sharing the supplied g: gt solves the plain
/// relation (I + S) gt = -(I + S*) g when kappa_relation is false, the
/// chi-weighted relation otherwise.  Points the inverse cap masks are zeroed
/// in both components; pick g with a zero of order >= 2 wherever the relation
/// matrix degenerates (for the plain relation that is wherever S = -I).
ModelVector make_smooth(std::shared_ptr<const SymbolTrack> track, const VecField& g,
                        bool kappa_relation);

/// The two smooth constructions over one shared g.
struct SmoothPair {
  ModelVector v_kappa;
  ModelVector v_zero;
};
SmoothPair make_smooth_pair(std::shared_ptr<const SymbolTrack> track, const VecField& g);

}  // namespace tscat::corpus

#endif

#ifndef TSCAT_TOOLS_PROBES_HPP
#define TSCAT_TOOLS_PROBES_HPP

#include <memory>

#include "tscat/corpus.hpp"
#include "tscat/hardy.hpp"

namespace tscat::tools::probes {

/// half-width of the analyticity strip of the near-axis fields below
inline constexpr double near_axis_gap = 0.045;

/// Deterministic rational field in the requested Hardy class: one pole at
/// distance `gap` from the axis, five fixed far poles, numerator x^xpow.
/// The nearest pole fixes the strip of analyticity, so every quadrature of
/// this field converges like exp(-gap pi N / L): slow enough to be visible
/// at moderate N, fast enough to vanish under refinement.  xpow >= 1 kills
/// the field at the origin, where branch-kink symbols concentrate their
/// discretization error.
VecField near_axis_rational(const Grid& grid, int dim, Sign cls, double gap, int variant,
                            int xpow = 0);

/// projected pair with near-axis fields in both channels
ModelVector near_axis_pair(std::shared_ptr<const SymbolTrack> track, double gap, int xpow = 0);

/// max over near-axis probes embedded in the channels orthogonal to K
/// (plus-class in the first, minus-class in the second) of
/// |<v, probe>| / (||v|| ||probe||)
double k_orthogonality_residual(const ModelVector& v, double gap);

/// | ||P_K v||^2 - <(I - S*S) gt, gt> | / ||P_K v||^2 for the plain-smooth
/// vector built from zero-order-2 gaussian carriers
double defect_form_isometry_residual(const std::shared_ptr<const SymbolTrack>& track);

/// Pair (gt, 0) with (chi+ + chi- S) gt = r pointwise for a plus-class
/// near-axis r.  Its gamma residual reduces to the continuation error of r
/// alone, so it trends with the grid instead of cancelling between the two
/// continuations the way pointwise-smooth vectors do.
ModelVector one_sided_defect(const std::shared_ptr<const SymbolTrack>& track, double gap);

/// || R(z) v - P_K (x - z)^-1 v || / ||v|| against the multiplied
/// representative pair, z in the lower half-plane
double resolvent_vs_multiplication(const ModelVector& v, cplx z);

/// || R(z1) v - R(z2) v - (z1 - z2) R(z1) R(z2) v || / ||v||
double resolvent_identity_residual(const ModelVector& v, cplx z1, cplx z2);

}  // namespace tscat::tools::probes

#endif

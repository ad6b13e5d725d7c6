#ifndef TSCAT_SCATTER_HPP
#define TSCAT_SCATTER_HPP

#include <string>
#include <vector>

#include "tscat/chartheta.hpp"
#include "tscat/weyl.hpp"

namespace tscat {

/// Stationary scattering matrix of a point interaction with vertex condition
/// u'(0) = kappa u(0), as a function of momentum:
///   S_v(k) = (ik I - kappa)^-1 (ik I + kappa),  k > 0, kappa Hermitian.
/// Derived directly from matching plane waves, so it is an oracle that shares
/// no code path with the boundary-triple formulas.
CMatrix vertex_scattering_oracle(const CMatrix& kappa, double k);

/// Scattering matrix in the spectral (energy) variable,
///   Sigma(k) = (M - kappa)^-1 (M* - kappa) (M*)^-1 M  at  M = M(k + i0).
/// M(k + i0) is evaluated exactly on the cut (side Above); kappa is the plain
/// extension parameter, which matches the operator pair when alpha = sqrt2 I.
CMatrix scattering_matrix(const ExtensionParams& ext, const HerglotzModel& model, double k);

/// Same operator assembled through the model-space route: the product of the
/// four resolvent-style factors at the boundary symbol S(k + i0), conjugated
/// back from the weight space by M(k+i0) + iI.  Exercises an independent
/// composition path against scattering_matrix.
CMatrix scattering_via_model_form(const ExtensionParams& ext, const HerglotzModel& model,
                                  double k);

/// Boundary spectral data at energy k, alpha = sqrt(2) I:
///   weight        = -2i (M - M*) = 4 Im M(k+i0)     (Hermitian PSD)
///   defect_left   = I - S* S                        (contraction defect)
///   defect_right  = I - S S*
/// together with the max-norm residuals of the closed factorizations
///   I - S*S = -2i (M* - iI)^-1 (M - M*) (M + iI)^-1
///   I - SS* =  2i (M + iI)^-1 (M* - M) (M* - iI)^-1.
struct SpectralWeights {
  CMatrix weight;
  CMatrix defect_left;
  CMatrix defect_right;
  double factorization_residual_left = 0.0;
  double factorization_residual_right = 0.0;
};

SpectralWeights weights(const ExtensionParams& ext, const HerglotzModel& model, double k);

/// || Sigma* W Sigma - W ||_max
double weighted_unitarity_defect(const CMatrix& sigma, const CMatrix& w);

struct ScatterSample {
  double k = 0.0;
  CMatrix sigma;
  CMatrix weight;
  double unitarity_defect = 0.0;
  bool skipped = false;
  std::string reason;
};

struct ScatteringCurve {
  int dim = 0;
  std::vector<ScatterSample> samples;
  bool any_skipped() const;
  /// Column layout: k, sigma_re_i_j..., sigma_im_i_j..., weight_re_i_j...,
  /// weight_im_i_j..., unitarity_defect, skipped, reason; 17 significant
  /// digits; skipped rows carry nan in the numeric fields.
  std::string to_csv() const;
};

/// Evaluate the scattering matrix and spectral weight over a sorted energy
/// grid.  Samples where any step reports a typed error are kept in the output
/// as skipped rows with the error code as reason; nothing is interpolated.
ScatteringCurve scan(const ExtensionParams& ext, const HerglotzModel& model,
                     const std::vector<double>& k_grid);

namespace tol {
inline constexpr double tol_unitary = 1e-8;
inline constexpr double tol_weight = 1e-9;
}  // namespace tol

}  // namespace tscat

#endif

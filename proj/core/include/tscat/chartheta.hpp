#ifndef TSCAT_CHARTHETA_HPP
#define TSCAT_CHARTHETA_HPP

#include <complex>

#include "tscat/weyl.hpp"

namespace tscat {

/// Characteristic function of the dissipative reference extension,
/// S(z) = I + i alpha (b_ref_adj - M(z))^-1 alpha, a contraction on the upper
/// half-plane.  Requires Im z > 0; use char_function_boundary on the axis.
CMatrix char_function(const ExtensionParams& ext, const HerglotzModel& model,
                      std::complex<double> z);

/// S(k + i0) through the regularization ladder.  The full S formula is
/// extrapolated (never M alone): S stays bounded where M blows up, so the
/// ladder is usable arbitrarily close to poles of M.
BoundaryValue char_function_boundary(const ExtensionParams& ext, const HerglotzModel& model,
                                     double k,
                                     const std::vector<double>& eps_ladder = default_eps_ladder());

/// S(k + i0) by exact on-cut evaluation of the catalog closed forms.  This is
/// the precise route wherever M itself is finite; within pole_floor of a real
/// pole of M use char_function_boundary, which stays well-behaved there.
CMatrix char_function_on_cut(const ExtensionParams& ext, const HerglotzModel& model, double k,
                             CutSide side = CutSide::Above);

/// Cayley transform (M(z) - iI)(M(z) + iI)^-1.  Coincides with char_function
/// when alpha = sqrt(2) I.
CMatrix cayley_form(const HerglotzModel& model, std::complex<double> z);

/// Theta_kappa(z) = I - i alpha (b_ref - M(z))^-1 alpha chi_plus, Im z < 0.
CMatrix theta(const ExtensionParams& ext, const HerglotzModel& model, std::complex<double> z);

/// ThetaHat_kappa(z) = I + i alpha (b_ref_adj - M(z))^-1 alpha chi_minus, Im z > 0.
CMatrix theta_hat(const ExtensionParams& ext, const HerglotzModel& model, std::complex<double> z);

/// Theta_kappa(z)^-1 = I + i alpha (b_kappa - M(z))^-1 alpha chi_plus, Im z < 0.
CMatrix theta_inverse(const ExtensionParams& ext, const HerglotzModel& model,
                      std::complex<double> z);

/// ThetaHat_kappa(z)^-1 = I - i alpha (b_kappa - M(z))^-1 alpha chi_minus, Im z > 0.
/// (Direct inversion of the theta_hat product confirms b_kappa is the correct
/// center here; the b_ref_adj variant fails the product identity whenever
/// kappa != iI, see the unit tests.)
CMatrix theta_hat_inverse(const ExtensionParams& ext, const HerglotzModel& model,
                          std::complex<double> z);

/// Theta expressed through the symbol: I + (S(conj z)* - I) chi_plus, Im z < 0.
/// Cross-checks theta() through the reflection law.
CMatrix theta_via_symbol(const ExtensionParams& ext, const HerglotzModel& model,
                         std::complex<double> z);

/// ThetaHat expressed through the symbol: I + (S(z) - I) chi_minus, Im z > 0.
CMatrix theta_hat_via_symbol(const ExtensionParams& ext, const HerglotzModel& model,
                             std::complex<double> z);

/// The four closed-form inverses used by the wave and scattering formulas,
/// all evaluated from one point z in the upper half-plane (the starred pair
/// lives at conj z):
///   s_inv           = (I + S(z))^-1                  = (I + i alpha M(z)^-1 alpha / 2) / 2
///   s_star_inv      = (I + S(z)*)^-1                 = (I - i alpha M(conj z)^-1 alpha / 2) / 2
///   chi_minus_inv   = (I + chi_minus (S(z) - I))^-1  = I - i chi_minus alpha (b_kappa - M(z))^-1 alpha
///   chi_plus_inv    = (I + chi_plus (S(z)* - I))^-1  = I + i chi_plus alpha (b_kappa - M(conj z))^-1 alpha
struct ResolventStyleInverses {
  CMatrix s_inv;
  CMatrix s_star_inv;
  CMatrix chi_minus_inv;
  CMatrix chi_plus_inv;
};

ResolventStyleInverses resolvent_style_inverses(const ExtensionParams& ext,
                                                const HerglotzModel& model,
                                                std::complex<double> z);

/// max(0, ||S|| - 1): how far a claimed contraction sticks out of the ball.
double contraction_defect(const CMatrix& s);

namespace tol {
inline constexpr double tol_identity = 1e-10;
inline constexpr double tol_contraction = 1e-10;
}  // namespace tol

}  // namespace tscat

#endif

#ifndef TSCAT_WEYL_HPP
#define TSCAT_WEYL_HPP

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "tscat/branch.hpp"
#include "tscat/matrix.hpp"

namespace tscat {

/// What a sampled operator value represents.
enum class Quantity { WeylFunction, CharFunction, Theta, ThetaHat, Scattering, SpectralWeight };

/// An n x n matrix value tagged with its evaluation point.
struct OperatorSample {
  std::complex<double> z;
  std::optional<CutSide> side;  // set only for on-axis evaluations
  Quantity quantity = Quantity::WeylFunction;
  CMatrix value;
};

/// One matrix residue term a / (lambda - z) of a rational Herglotz part.
struct LeadPole {
  double lambda = 0.0;
  CMatrix a;  // Hermitian PSD
};

/// Operator-valued Herglotz function M(z) from a small catalog of closed
/// forms.  All members are analytic off the real axis and satisfy the
/// reflection law M(conj z) = M(z)*; positivity of Im M in the upper
/// half-plane is checked by validate_herglotz rather than assumed.
class HerglotzModel {
 public:
  enum class Kind { StarGraph, LeadRational, Interval };

  /// n decoupled half-lines joined at one vertex: M(z) = i sqrt(z) I_n.
  static HerglotzModel star_graph(int n);

  /// M(z) = v + i sqrt(z) w + sum_j a_j / (lambda_j - z), with w, a_j
  /// Hermitian PSD, v Hermitian, lambda_j real and distinct.
  static HerglotzModel lead_rational(CMatrix w, CMatrix v, std::vector<LeadPole> poles);

  /// Same as lead_rational but without the construction-time validity
  /// checks.  Exists so tests can feed validate_herglotz a broken model.
  static HerglotzModel lead_rational_unchecked(CMatrix w, CMatrix v, std::vector<LeadPole> poles);

  /// Dirichlet-to-Neumann function of -d^2/dx^2 on [0, len]: a 2x2 matrix
  /// built from sqrt(z)/sin(sqrt(z) len) and cos(sqrt(z) len).  Entire in the
  /// branch variable, with real poles at the Dirichlet eigenvalues.
  static HerglotzModel interval(double len);

  Kind kind() const noexcept { return m_kind; }
  int dim() const noexcept { return m_dim; }

  /// Evaluate M at z off the real axis, or on the cut with an explicit side.
  CMatrix eval(std::complex<double> z, std::optional<CutSide> side = std::nullopt) const;

  OperatorSample sample(std::complex<double> z, std::optional<CutSide> side = std::nullopt) const;

  /// True when k sits on (or within floor of) a real pole of the model.
  bool near_real_pole(double k, double floor) const;

  const std::vector<LeadPole>& poles() const noexcept { return m_poles; }

 private:
  HerglotzModel() = default;

  Kind m_kind = Kind::StarGraph;
  int m_dim = 0;
  double m_len = 0.0;         // Interval
  CMatrix m_w, m_v;           // LeadRational
  std::vector<LeadPole> m_poles;
};

/// Result of sweeping reflection and positivity checks over a grid.
struct HerglotzReport {
  double max_reflection_defect = 0.0;
  double min_im_eigenvalue = 0.0;
  bool pass = false;
};

/// Check M(conj z) = M(z)* and Im M(z) >= -tol on the given upper half-plane
/// grid.  Only non-negativity is enforced; Im M may be singular (it is, on
/// parts of the axis for every catalog model).
HerglotzReport validate_herglotz(const HerglotzModel& model,
                                 const std::vector<std::complex<double>>& upper_grid);

/// Extension data (alpha, kappa) for the boundary parametrization, together
/// with the derived matrices used throughout: b_kappa = alpha kappa alpha / 2,
/// the dissipative reference b_ref = i alpha alpha / 2 and its adjoint, and
/// the projections-like chi_pm = (I +- i kappa) / 2.
class ExtensionParams {
 public:
  ExtensionParams(CMatrix alpha, CMatrix kappa);

  /// alpha = sqrt(2) I, the normalization in which the scattering formulas
  /// take their plain kappa form.
  static ExtensionParams with_sqrt2_alpha(CMatrix kappa);

  int dim() const noexcept { return m_alpha.rows(); }
  const CMatrix& alpha() const noexcept { return m_alpha; }
  const CMatrix& kappa() const noexcept { return m_kappa; }
  const CMatrix& b_kappa() const noexcept { return m_b_kappa; }
  const CMatrix& b_ref() const noexcept { return m_b_ref; }
  const CMatrix& b_ref_adj() const noexcept { return m_b_ref_adj; }
  const CMatrix& chi_plus() const noexcept { return m_chi_plus; }
  const CMatrix& chi_minus() const noexcept { return m_chi_minus; }

  bool kappa_is_hermitian(double tol = tol::tol_herm) const;
  bool alpha_is_sqrt2_identity(double tol = 1e-12) const;

  /// Same alpha, kappa = 0.  Used by the wave formulas for the reference
  /// endpoint of the pair.
  ExtensionParams zero_kappa() const;

 private:
  CMatrix m_alpha, m_kappa;
  CMatrix m_b_kappa, m_b_ref, m_b_ref_adj, m_chi_plus, m_chi_minus;
};

namespace tol {
inline constexpr double tol_herglotz = 1e-9;
inline constexpr double pole_floor = 1e-8;
/// convergence gate for the boundary-value ladder
inline constexpr double tol_bv = 1e-6;
}  // namespace tol

/// Regularization ladder for boundary values, descending.
std::vector<double> default_eps_ladder();

struct BoundaryValue {
  CMatrix m;
  /// max-norm difference of the last two Richardson extrapolants
  double convergence_estimate = 0.0;
};

/// Two-point Richardson extrapolation of f(eps) as eps -> 0+ along a
/// descending ladder.  Shared by every boundary-value evaluation in the
/// library so they all converge (or refuse) the same way.
BoundaryValue richardson_boundary(const std::function<CMatrix(double)>& f_of_eps,
                                  const std::vector<double>& eps_ladder);

/// M(k + i0) by evaluating up the ladder and applying two-point Richardson
/// extrapolation in eps.  Reports NonConvergent when the last two
/// extrapolants disagree beyond tol_bv, AtPole on a real pole of the model.
BoundaryValue boundary_value(const HerglotzModel& model, double k,
                             const std::vector<double>& eps_ladder = default_eps_ladder());

}  // namespace tscat

#endif

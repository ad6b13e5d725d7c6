#include "tscat/chartheta.hpp"

#include <cmath>

#include "tscat/errors.hpp"

namespace tscat {

namespace {

void require_upper(std::complex<double> z, const char* who) {
  if (!(z.imag() > 0.0)) throw WrongHalfPlane(std::string(who) + " needs Im z > 0");
}

void require_lower(std::complex<double> z, const char* who) {
  if (!(z.imag() < 0.0)) throw WrongHalfPlane(std::string(who) + " needs Im z < 0");
}

// I + i * alpha (center - M)^-1 alpha * right  (right defaults to identity)
CMatrix resolvent_sandwich(const CMatrix& alpha, const CMatrix& center, const CMatrix& m,
                           cplx iscale, const CMatrix* right) {
  const CMatrix inner = solve(center - m, right ? alpha * (*right) : alpha);
  return CMatrix::identity(alpha.rows()) + alpha * inner * iscale;
}

}  // namespace

CMatrix char_function(const ExtensionParams& ext, const HerglotzModel& model,
                      std::complex<double> z) {
  require_upper(z, "char_function");
  const CMatrix m = model.eval(z);
  return resolvent_sandwich(ext.alpha(), ext.b_ref_adj(), m, cplx(0.0, 1.0), nullptr);
}

BoundaryValue char_function_boundary(const ExtensionParams& ext, const HerglotzModel& model,
                                     double k, const std::vector<double>& eps_ladder) {
  return richardson_boundary(
      [&](double e) { return char_function(ext, model, cplx(k, e)); }, eps_ladder);
}

CMatrix char_function_on_cut(const ExtensionParams& ext, const HerglotzModel& model, double k,
                             CutSide side) {
  const CMatrix m = model.eval(cplx(k, 0.0), side);
  return resolvent_sandwich(ext.alpha(), ext.b_ref_adj(), m, cplx(0.0, 1.0), nullptr);
}

CMatrix cayley_form(const HerglotzModel& model, std::complex<double> z) {
  require_upper(z, "cayley_form");
  const CMatrix m = model.eval(z);
  const CMatrix id = CMatrix::identity(model.dim());
  const CMatrix ii = CMatrix::scaled_identity(model.dim(), cplx(0.0, 1.0));
  // (M - iI)(M + iI)^-1 as the adjoint of a left solve
  return solve((m + ii).adjoint(), (m - ii).adjoint()).adjoint();
}

CMatrix theta(const ExtensionParams& ext, const HerglotzModel& model, std::complex<double> z) {
  require_lower(z, "theta");
  const CMatrix m = model.eval(z);
  const CMatrix& chi = ext.chi_plus();
  return resolvent_sandwich(ext.alpha(), ext.b_ref(), m, cplx(0.0, -1.0), &chi);
}

CMatrix theta_hat(const ExtensionParams& ext, const HerglotzModel& model, std::complex<double> z) {
  require_upper(z, "theta_hat");
  const CMatrix m = model.eval(z);
  const CMatrix& chi = ext.chi_minus();
  return resolvent_sandwich(ext.alpha(), ext.b_ref_adj(), m, cplx(0.0, 1.0), &chi);
}

CMatrix theta_inverse(const ExtensionParams& ext, const HerglotzModel& model,
                      std::complex<double> z) {
  require_lower(z, "theta_inverse");
  const CMatrix m = model.eval(z);
  const CMatrix& chi = ext.chi_plus();
  return resolvent_sandwich(ext.alpha(), ext.b_kappa(), m, cplx(0.0, 1.0), &chi);
}

CMatrix theta_hat_inverse(const ExtensionParams& ext, const HerglotzModel& model,
                          std::complex<double> z) {
  require_upper(z, "theta_hat_inverse");
  const CMatrix m = model.eval(z);
  const CMatrix& chi = ext.chi_minus();
  return resolvent_sandwich(ext.alpha(), ext.b_kappa(), m, cplx(0.0, -1.0), &chi);
}

CMatrix theta_via_symbol(const ExtensionParams& ext, const HerglotzModel& model,
                         std::complex<double> z) {
  require_lower(z, "theta_via_symbol");
  const CMatrix s_star = char_function(ext, model, std::conj(z)).adjoint();
  const int n = ext.dim();
  return CMatrix::identity(n) + (s_star - CMatrix::identity(n)) * ext.chi_plus();
}

CMatrix theta_hat_via_symbol(const ExtensionParams& ext, const HerglotzModel& model,
                             std::complex<double> z) {
  require_upper(z, "theta_hat_via_symbol");
  const CMatrix s = char_function(ext, model, z);
  const int n = ext.dim();
  return CMatrix::identity(n) + (s - CMatrix::identity(n)) * ext.chi_minus();
}

ResolventStyleInverses resolvent_style_inverses(const ExtensionParams& ext,
                                                const HerglotzModel& model,
                                                std::complex<double> z) {
  require_upper(z, "resolvent_style_inverses");
  const int n = ext.dim();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix m_up = model.eval(z);
  const CMatrix m_dn = model.eval(std::conj(z));
  const CMatrix& a = ext.alpha();

  ResolventStyleInverses out;
  const cplx half(0.5, 0.0);
  out.s_inv = (id + a * solve(m_up, a) * cplx(0.0, 0.5)) * half;
  out.s_star_inv = (id + a * solve(m_dn, a) * cplx(0.0, -0.5)) * half;
  out.chi_minus_inv = id - ext.chi_minus() * a * solve(ext.b_kappa() - m_up, a) * cplx(0.0, 1.0);
  out.chi_plus_inv = id + ext.chi_plus() * a * solve(ext.b_kappa() - m_dn, a) * cplx(0.0, 1.0);
  return out;
}

double contraction_defect(const CMatrix& s) { return std::max(0.0, s.op_norm() - 1.0); }

}  // namespace tscat

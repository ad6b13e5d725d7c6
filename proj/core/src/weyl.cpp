#include "tscat/weyl.hpp"

#include <cmath>
#include <limits>

#include "tscat/errors.hpp"

namespace tscat {

HerglotzModel HerglotzModel::star_graph(int n) {
  if (n < 1) throw BadShape("star_graph needs n >= 1");
  HerglotzModel m;
  m.m_kind = Kind::StarGraph;
  m.m_dim = n;
  return m;
}

static void check_lead_data(const CMatrix& w, const CMatrix& v, const std::vector<LeadPole>& poles) {
  const int n = w.rows();
  if (!w.square() || !v.square() || v.rows() != n) throw BadShape("lead_rational matrices must be square, same dim");
  if (herm_defect(w) > tol::tol_herm || herm_defect(v) > tol::tol_herm)
    throw NotHermitian("lead_rational needs Hermitian w and v");
  if (psd_defect(w) > tol::tol_herm) throw Precondition("lead_rational needs w >= 0");
  for (size_t i = 0; i < poles.size(); ++i) {
    const auto& p = poles[i];
    if (!p.a.square() || p.a.rows() != n) throw BadShape("lead_rational residue dim mismatch");
    if (herm_defect(p.a) > tol::tol_herm) throw NotHermitian("lead_rational residues must be Hermitian");
    if (psd_defect(p.a) > tol::tol_herm) throw Precondition("lead_rational residues must be PSD");
    if (!std::isfinite(p.lambda)) throw Precondition("lead_rational pole must be finite");
    for (size_t j = 0; j < i; ++j)
      if (p.lambda == poles[j].lambda) throw Precondition("lead_rational poles must be distinct");
  }
}

HerglotzModel HerglotzModel::lead_rational(CMatrix w, CMatrix v, std::vector<LeadPole> poles) {
  check_lead_data(w, v, poles);
  return lead_rational_unchecked(std::move(w), std::move(v), std::move(poles));
}

HerglotzModel HerglotzModel::lead_rational_unchecked(CMatrix w, CMatrix v,
                                                     std::vector<LeadPole> poles) {
  HerglotzModel m;
  m.m_kind = Kind::LeadRational;
  m.m_dim = w.rows();
  m.m_w = std::move(w);
  m.m_v = std::move(v);
  m.m_poles = std::move(poles);
  return m;
}

HerglotzModel HerglotzModel::interval(double len) {
  if (!(len > 0.0) || !std::isfinite(len)) throw Precondition("interval needs len > 0");
  HerglotzModel m;
  m.m_kind = Kind::Interval;
  m.m_dim = 2;
  m.m_len = len;
  return m;
}

CMatrix HerglotzModel::eval(std::complex<double> z, std::optional<CutSide> side) const {
  switch (m_kind) {
    case Kind::StarGraph:
      return CMatrix::scaled_identity(m_dim, cplx(0.0, 1.0) * sqrt_upper(z, side));
    case Kind::LeadRational: {
      CMatrix m = m_v + m_w * (cplx(0.0, 1.0) * sqrt_upper(z, side));
      for (const auto& p : m_poles) {
        const cplx den = cplx(p.lambda, 0.0) - z;
        if (std::abs(den) < tol::pole_floor) throw AtPole("lead_rational evaluated at a pole");
        m = m + p.a * (cplx(1.0, 0.0) / den);
      }
      return m;
    }
    case Kind::Interval: {
      // entire in the branch variable, so any side works on the cut
      const cplx w = sqrt_upper(z, side ? side : std::optional<CutSide>(CutSide::Above));
      const cplx arg = w * m_len;
      cplx ratio;  // sqrt(z) / sin(sqrt(z) len)
      if (std::abs(arg) < 1e-8) {
        ratio = cplx(1.0, 0.0) / cplx(m_len, 0.0);
      } else {
        const cplx s = std::sin(arg);
        if (std::abs(s) < tol::pole_floor && std::abs(z.imag()) < tol::pole_floor)
          throw AtPole("interval evaluated at a Dirichlet eigenvalue");
        ratio = w / s;
      }
      const cplx c = std::cos(arg);
      CMatrix m(2, 2);
      m(0, 0) = -ratio * c;
      m(0, 1) = ratio;
      m(1, 0) = ratio;
      m(1, 1) = -ratio * c;
      return m;
    }
  }
  throw Precondition("unreachable model kind");
}

OperatorSample HerglotzModel::sample(std::complex<double> z, std::optional<CutSide> side) const {
  return OperatorSample{z, side, Quantity::WeylFunction, eval(z, side)};
}

bool HerglotzModel::near_real_pole(double k, double floor) const {
  switch (m_kind) {
    case Kind::StarGraph:
      return false;
    case Kind::LeadRational:
      for (const auto& p : m_poles)
        if (std::abs(k - p.lambda) <= floor) return true;
      return false;
    case Kind::Interval: {
      if (k <= 0.0) return false;
      const double phase = std::sqrt(k) * m_len / M_PI;
      const double nearest = std::round(phase);
      return nearest >= 1.0 && std::abs(phase - nearest) * M_PI <= floor;
    }
  }
  return false;
}

HerglotzReport validate_herglotz(const HerglotzModel& model,
                                 const std::vector<std::complex<double>>& upper_grid) {
  HerglotzReport rep;
  rep.min_im_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& z : upper_grid) {
    if (!(z.imag() > 0.0)) throw WrongHalfPlane("validate_herglotz grid must lie in Im z > 0");
    const CMatrix m = model.eval(z);
    const CMatrix mbar = model.eval(std::conj(z));
    rep.max_reflection_defect =
        std::max(rep.max_reflection_defect, (mbar - m.adjoint()).max_norm());
    const CMatrix im = (m - m.adjoint()) * cplx(0.0, -0.5);
    const auto ev = hermitian_eigenvalues(im);
    rep.min_im_eigenvalue = std::min(rep.min_im_eigenvalue, ev.front());
  }
  rep.pass = rep.max_reflection_defect <= tol::tol_herglotz &&
             rep.min_im_eigenvalue >= -tol::tol_herglotz;
  return rep;
}

ExtensionParams::ExtensionParams(CMatrix alpha, CMatrix kappa)
    : m_alpha(std::move(alpha)), m_kappa(std::move(kappa)) {
  if (!m_alpha.square() || !m_kappa.square() || m_alpha.rows() != m_kappa.rows())
    throw BadShape("alpha and kappa must be square, same dim");
  if (!m_alpha.all_finite() || !m_kappa.all_finite())
    throw Precondition("extension data must be finite");
  if (herm_defect(m_alpha) > tol::tol_herm) throw NotHermitian("alpha must be Hermitian");
  const auto ev = hermitian_eigenvalues(m_alpha);
  double min_abs = std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (double l : ev) {
    min_abs = std::min(min_abs, std::abs(l));
    max_abs = std::max(max_abs, std::abs(l));
  }
  if (min_abs <= 1e-10 * std::max(1.0, max_abs))
    throw Precondition("alpha must have trivial kernel");
  const cplx half(0.5, 0.0), ih(0.0, 0.5);
  m_b_kappa = m_alpha * m_kappa * m_alpha * half;
  m_b_ref = m_alpha * m_alpha * ih;
  m_b_ref_adj = m_alpha * m_alpha * (-ih);
  const CMatrix id = CMatrix::identity(dim());
  m_chi_plus = (id + m_kappa * cplx(0.0, 1.0)) * half;
  m_chi_minus = (id - m_kappa * cplx(0.0, 1.0)) * half;
}

ExtensionParams ExtensionParams::with_sqrt2_alpha(CMatrix kappa) {
  const int n = kappa.rows();
  return ExtensionParams(CMatrix::scaled_identity(n, cplx(std::sqrt(2.0), 0.0)), std::move(kappa));
}

bool ExtensionParams::kappa_is_hermitian(double tol) const { return herm_defect(m_kappa) <= tol; }

bool ExtensionParams::alpha_is_sqrt2_identity(double tol) const {
  return (m_alpha - CMatrix::scaled_identity(dim(), cplx(std::sqrt(2.0), 0.0))).max_norm() <= tol;
}

ExtensionParams ExtensionParams::zero_kappa() const {
  return ExtensionParams(m_alpha, CMatrix::zero(dim(), dim()));
}

std::vector<double> default_eps_ladder() { return {1e-2, 1e-3, 1e-4, 1e-5}; }

BoundaryValue richardson_boundary(const std::function<CMatrix(double)>& f_of_eps,
                                  const std::vector<double>& eps_ladder) {
  if (eps_ladder.size() < 2) throw Precondition("eps ladder needs at least two rungs");
  for (size_t i = 1; i < eps_ladder.size(); ++i)
    if (!(eps_ladder[i] < eps_ladder[i - 1]) || !(eps_ladder[i] > 0.0))
      throw Precondition("eps ladder must be positive and strictly descending");

  std::vector<CMatrix> f_eps;
  f_eps.reserve(eps_ladder.size());
  for (double e : eps_ladder) f_eps.push_back(f_of_eps(e));

  // two-point Richardson, eliminating the O(eps) term per adjacent pair
  std::vector<CMatrix> extr;
  for (size_t i = 0; i + 1 < f_eps.size(); ++i) {
    const double e0 = eps_ladder[i], e1 = eps_ladder[i + 1];
    extr.push_back((f_eps[i + 1] * cplx(e0, 0.0) - f_eps[i] * cplx(e1, 0.0)) *
                   (cplx(1.0, 0.0) / cplx(e0 - e1, 0.0)));
  }
  BoundaryValue bv;
  bv.m = extr.back();
  bv.convergence_estimate =
      extr.size() >= 2 ? (extr.back() - extr[extr.size() - 2]).max_norm() : 0.0;
  if (!bv.m.all_finite() || bv.convergence_estimate > tol::tol_bv)
    throw NonConvergent("boundary-value ladder did not settle");
  return bv;
}

BoundaryValue boundary_value(const HerglotzModel& model, double k,
                             const std::vector<double>& eps_ladder) {
  if (model.near_real_pole(k, tol::pole_floor)) throw AtPole("boundary value at a real pole");
  return richardson_boundary([&](double e) { return model.eval(cplx(k, e)); }, eps_ladder);
}

}  // namespace tscat

#include "tscat/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "tscat/errors.hpp"

namespace tscat {

namespace {

CMatrix boundary_weyl(const HerglotzModel& model, double k) {
  if (model.near_real_pole(k, tol::pole_floor)) throw AtPole("boundary evaluation at a real pole");
  return model.eval(cplx(k, 0.0), CutSide::Above);
}

CMatrix boundary_symbol(const ExtensionParams& ext, const HerglotzModel& model, double k) {
  if (model.near_real_pole(k, tol::pole_floor))
    return char_function_boundary(ext, model, k).m;
  return char_function_on_cut(ext, model, k, CutSide::Above);
}

}  // namespace

CMatrix vertex_scattering_oracle(const CMatrix& kappa, double k) {
  if (!(k > 0.0)) throw Precondition("vertex oracle needs momentum k > 0");
  if (herm_defect(kappa) > tol::tol_herm)
    throw NotHermitian("vertex oracle needs Hermitian kappa");
  const int n = kappa.rows();
  const CMatrix ik = CMatrix::scaled_identity(n, cplx(0.0, k));
  return solve(ik - kappa, ik + kappa);
}

CMatrix scattering_matrix(const ExtensionParams& ext, const HerglotzModel& model, double k) {
  const CMatrix m = boundary_weyl(model, k);
  const CMatrix ms = m.adjoint();
  const CMatrix& kap = ext.kappa();
  // (M - kappa)^-1 (M* - kappa) (M*)^-1 M, assembled right to left
  const CMatrix inner = (ms - kap) * solve(ms, m);
  return solve(m - kap, inner);
}

CMatrix scattering_via_model_form(const ExtensionParams& ext, const HerglotzModel& model,
                                  double k) {
  if (!ext.alpha_is_sqrt2_identity())
    throw Precondition("model-form scattering assumes alpha = sqrt(2) I");
  const int n = ext.dim();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix m = boundary_weyl(model, k);
  const CMatrix s = boundary_symbol(ext, model, k);
  const CMatrix ss = s.adjoint();

  const CMatrix f1 = solve(id + ext.chi_minus() * (s - id), id);   // (I + chi_-(S - I))^-1
  const CMatrix f2 = id + ext.chi_plus() * (ss - id);
  const CMatrix f3 = solve(id + ss, id);                           // (I + S*)^-1
  const CMatrix f4 = id + s;
  const CMatrix product = f1 * f2 * f3 * f4;

  // conjugate from the weight space back to the boundary space by M + iI
  const CMatrix m_plus_i = m + CMatrix::scaled_identity(n, cplx(0.0, 1.0));
  return solve(m_plus_i, product * m_plus_i);
}

SpectralWeights weights(const ExtensionParams& ext, const HerglotzModel& model, double k) {
  if (!ext.alpha_is_sqrt2_identity())
    throw Precondition("spectral weights assume alpha = sqrt(2) I");
  const int n = ext.dim();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix m = boundary_weyl(model, k);
  const CMatrix ms = m.adjoint();
  const CMatrix s = boundary_symbol(ext, model, k);
  const CMatrix ss = s.adjoint();
  const CMatrix i_id = CMatrix::scaled_identity(n, cplx(0.0, 1.0));

  SpectralWeights out;
  out.weight = (m - ms) * cplx(0.0, -2.0);
  out.defect_left = id - ss * s;
  out.defect_right = id - s * ss;

  const CMatrix mm = m - ms;
  const CMatrix left = solve(ms - i_id, mm * inverse(m + i_id)) * cplx(0.0, -2.0);
  const CMatrix right = solve(m + i_id, (ms - m) * inverse(ms - i_id)) * cplx(0.0, 2.0);
  out.factorization_residual_left = (out.defect_left - left).max_norm();
  out.factorization_residual_right = (out.defect_right - right).max_norm();
  return out;
}

double weighted_unitarity_defect(const CMatrix& sigma, const CMatrix& w) {
  return (sigma.adjoint() * w * sigma - w).max_norm();
}

bool ScatteringCurve::any_skipped() const {
  return std::any_of(samples.begin(), samples.end(),
                     [](const ScatterSample& s) { return s.skipped; });
}

ScatteringCurve scan(const ExtensionParams& ext, const HerglotzModel& model,
                     const std::vector<double>& k_grid) {
  if (!std::is_sorted(k_grid.begin(), k_grid.end()))
    throw Precondition("scan grid must be sorted ascending");
  ScatteringCurve curve;
  curve.dim = ext.dim();
  curve.samples.reserve(k_grid.size());
  for (double k : k_grid) {
    ScatterSample s;
    s.k = k;
    try {
      s.sigma = scattering_matrix(ext, model, k);
      const CMatrix m = boundary_weyl(model, k);
      s.weight = (m - m.adjoint()) * cplx(0.0, -2.0);
      s.unitarity_defect = weighted_unitarity_defect(s.sigma, s.weight);
    } catch (const Error& e) {
      s.skipped = true;
      s.reason = e.code();
      s.sigma = CMatrix();
      s.weight = CMatrix();
      s.unitarity_defect = std::nan("");
    }
    curve.samples.push_back(std::move(s));
  }
  return curve;
}

namespace {

void append_g17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string ScatteringCurve::to_csv() const {
  const int n = dim;
  std::string out = "k";
  const char* blocks[4] = {"sigma_re", "sigma_im", "weight_re", "weight_im"};
  for (const char* b : blocks)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        out += ", ";
        out += b;
        out += "_" + std::to_string(i) + "_" + std::to_string(j);
      }
  out += ", unitarity_defect, skipped, reason\n";

  const double qnan = std::nan("");
  for (const auto& s : samples) {
    append_g17(out, s.k);
    const bool have = !s.skipped;
    for (int block = 0; block < 4; ++block) {
      const CMatrix& mat = block < 2 ? s.sigma : s.weight;
      const bool re = block % 2 == 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          out += ", ";
          const double v = have ? (re ? mat(i, j).real() : mat(i, j).imag()) : qnan;
          append_g17(out, v);
        }
    }
    out += ", ";
    append_g17(out, s.unitarity_defect);
    out += ", ";
    out += s.skipped ? "1" : "0";
    out += ", ";
    out += s.reason;
    out += "\n";
  }
  return out;
}

}  // namespace tscat

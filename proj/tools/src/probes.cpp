#include "tscat_tools/probes.hpp"

#include <cmath>

#include "tscat/matrix.hpp"

namespace tscat::tools::probes {

VecField near_axis_rational(const Grid& gr, int dim, Sign cls, double gap, int variant,
                            int xpow) {
  const double side = (cls == Sign::Plus) ? -1.0 : 1.0;
  const double re0[] = {0.7, -0.9, 1.6};
  struct P {
    double re, im;
  };
  constexpr P far[] = {{-1.1, 0.9}, {2.3, 1.4}, {-3.7, 1.1}, {1.9, 2.0}, {-0.4, 1.7}};
  VecField f(gr, dim);
  for (int c = 0; c < dim; ++c) {
    const double re_near = re0[(variant + c) % 3];
    for (int j = 0; j < gr.n(); ++j) {
      const cplx x(gr.x(j), 0.0);
      cplx d = x - cplx(re_near, side * gap);
      for (const P& p : far) d *= (x - cplx(p.re, side * p.im)) / cplx(3.0, 0.0);
      cplx num(1.0, 0.0);
      for (int q = 0; q < xpow; ++q) num *= x;
      f.at(c, j) = num / d;
    }
  }
  return f;
}

ModelVector near_axis_pair(std::shared_ptr<const SymbolTrack> track, double gap, int xpow) {
  const Grid& gr = track->grid();
  const int d = track->dim();
  VecField gt = near_axis_rational(gr, d, Sign::Minus, gap, 0, xpow);
  VecField g = near_axis_rational(gr, d, Sign::Plus, gap, 1, xpow);
  return project_K(ModelVector{std::move(track), std::move(gt), std::move(g), std::nullopt});
}

double k_orthogonality_residual(const ModelVector& v, double gap) {
  const Grid& gr = v.track->grid();
  const int d = v.gt.dim();
  const double vn = model_norm(v);
  double res = 0.0;
  for (int var : {0, 1, 2}) {
    const VecField dp = near_axis_rational(gr, d, Sign::Plus, gap, var);
    const VecField dm = near_axis_rational(gr, d, Sign::Minus, gap, var);
    const ModelVector ep{v.track, dp, VecField(gr, d), std::nullopt};
    const ModelVector em{v.track, VecField(gr, d), dm, std::nullopt};
    res = std::max(res, std::abs(model_inner(v, ep)) / (vn * dp.norm()));
    res = std::max(res, std::abs(model_inner(v, em)) / (vn * dm.norm()));
  }
  return res;
}

double defect_form_isometry_residual(const std::shared_ptr<const SymbolTrack>& track) {
  const Grid& gr = track->grid();
  const int d = track->dim();
  std::vector<corpus::GaussianOpts> recipes;
  for (int c = 0; c < d; ++c) recipes.push_back({0.6 + 0.2 * c, 0.0, 6.0, 2, cplx(1.0, 0.0)});
  const ModelVector v = corpus::make_smooth(track, corpus::gaussian_field(gr, recipes), false);
  const ModelVector p = project_K(v);
  const double lhs = model_norm_sq(p);
  double rhs = 0.0;
  for (int j = 0; j < gr.n(); ++j) {
    CMatrix col(d, 1);
    for (int c = 0; c < d; ++c) col(c, 0) = v.gt.at(c, j);
    const CMatrix sg = track->value(j) * col;
    double term = 0.0;
    for (int c = 0; c < d; ++c) term += std::norm(col(c, 0)) - std::norm(sg(c, 0));
    rhs += term * gr.dx();
  }
  return std::abs(lhs - rhs) / lhs;
}

ModelVector one_sided_defect(const std::shared_ptr<const SymbolTrack>& track, double gap) {
  const Grid& gr = track->grid();
  const int d = track->dim();
  const VecField r = near_axis_rational(gr, d, Sign::Plus, gap, 0);
  const CMatrix chip = track->ext().chi_plus();
  const CMatrix chim = track->ext().chi_minus();
  VecField gt(gr, d);
  for (int j = 0; j < gr.n(); ++j) {
    CMatrix rhs(d, 1);
    for (int c = 0; c < d; ++c) rhs(c, 0) = r.at(c, j);
    const CMatrix sol = solve(chip + chim * track->value(j), rhs);
    for (int c = 0; c < d; ++c) gt.at(c, j) = sol(c, 0);
  }
  return ModelVector{track, std::move(gt), VecField(gr, d), std::nullopt};
}

double resolvent_vs_multiplication(const ModelVector& v, cplx z) {
  const Grid& gr = v.track->grid();
  std::vector<cplx> w(static_cast<size_t>(gr.n()));
  for (int j = 0; j < gr.n(); ++j) w[static_cast<size_t>(j)] = 1.0 / (cplx(gr.x(j), 0.0) - z);
  const ModelVector target = project_K(ModelVector{v.track, v.base_gt().scaled_pointwise(w),
                                                   v.base_g().scaled_pointwise(w), std::nullopt});
  const ModelVector got = model_resolvent(v, z);
  const ModelVector diff{v.track, got.gt - target.gt, got.g - target.g, std::nullopt};
  return model_norm(diff) / model_norm(v);
}

double resolvent_identity_residual(const ModelVector& v, cplx z1, cplx z2) {
  const ModelVector r1 = model_resolvent(v, z1);
  const ModelVector r2 = model_resolvent(v, z2);
  const ModelVector r12 = model_resolvent(r2, z1);
  const ModelVector diff{v.track, r1.gt - r2.gt - r12.gt * (z1 - z2),
                         r1.g - r2.g - r12.g * (z1 - z2), std::nullopt};
  return model_norm(diff) / model_norm(v);
}

}  // namespace tscat::tools::probes

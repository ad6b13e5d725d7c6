#include "tscat/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "tscat/chartheta.hpp"
#include "tscat/errors.hpp"

namespace tscat {
namespace {

constexpr double k_pi = 3.14159265358979323846;

void check_pair(const SymbolTrack& track, const VecField& gt, const VecField& g) {
  if (!(gt.grid() == track.grid()) || !(g.grid() == track.grid()) || gt.dim() != track.dim() ||
      g.dim() != track.dim())
    throw BadShape("vector fields do not match their track");
}

const SymbolTrack& track_of(const ModelVector& v) {
  if (!v.track) throw Precondition("model vector has no track");
  check_pair(*v.track, v.gt, v.g);
  if (v.source) check_pair(*v.track, v.source->gt, v.source->g);
  return *v.track;
}

/// Cauchy quadrature of f at z, one value per component.  No gates here;
/// the public entry points gate half-plane and edge mass.
std::vector<cplx> cauchy_value(const VecField& f, Sign cls, cplx z) {
  const Grid& gr = f.grid();
  // -(1/2 pi i) sum f/(x - z) for the minus class, +(1/2 pi i) for plus
  const cplx pref(0.0, (cls == Sign::Minus ? 1.0 : -1.0) / (2.0 * k_pi));
  std::vector<cplx> out(static_cast<size_t>(f.dim()));
  for (int c = 0; c < f.dim(); ++c) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j < gr.n(); ++j) acc += f.at(c, j) / (cplx(gr.x(j), 0.0) - z);
    out[c] = pref * gr.dx() * acc;
  }
  return out;
}

VecField field_minus_const(const VecField& f, const std::vector<cplx>& c) {
  VecField r = f;
  for (int comp = 0; comp < f.dim(); ++comp)
    for (int j = 0; j < f.grid().n(); ++j) r.at(comp, j) -= c[static_cast<size_t>(comp)];
  return r;
}

std::vector<cplx> resolvent_weights(const Grid& gr, cplx z) {
  std::vector<cplx> w(static_cast<size_t>(gr.n()));
  for (int j = 0; j < gr.n(); ++j) w[static_cast<size_t>(j)] = 1.0 / (cplx(gr.x(j), 0.0) - z);
  return w;
}

bool keeps_g(WaveKind kind) {
  return kind == WaveKind::MinusToZero || kind == WaveKind::MinusToKappa;
}

/// Relation matrices at one grid point: the new component solves a x = -b k
/// with k the kept component.
std::pair<CMatrix, CMatrix> wave_matrices(WaveKind kind, const ExtensionParams& ext,
                                          const CMatrix& s) {
  const CMatrix id = CMatrix::identity(s.rows());
  const CMatrix sst = s.adjoint();
  switch (kind) {
    case WaveKind::MinusToZero:
      return {id + s, id + sst};
    case WaveKind::PlusToZero:
      return {id + sst, id + s};
    case WaveKind::MinusToKappa:
      return {id + ext.chi_minus() * (s - id), id + ext.chi_plus() * (sst - id)};
    case WaveKind::PlusToKappa:
      return {id + ext.chi_plus() * (sst - id), id + ext.chi_minus() * (s - id)};
  }
  throw Precondition("unknown wave map kind");
}

/// Inverse guarded by the cap; nullopt means the point gets masked.
std::optional<CMatrix> capped_inverse(const CMatrix& a) {
  try {
    CMatrix ainv = inverse(a);
    if (ainv.max_norm() > tol::inverse_cap) return std::nullopt;
    return ainv;
  } catch (const SingularMatrix&) {
    return std::nullopt;
  }
}

}  // namespace

std::shared_ptr<const SymbolTrack> SymbolTrack::constant(const Grid& grid,
                                                         const ExtensionParams& ext,
                                                         const CMatrix& s) {
  if (!s.square() || s.rows() != ext.dim()) throw BadShape("symbol does not match the extension");
  auto t = std::shared_ptr<SymbolTrack>(new SymbolTrack(grid, ext));
  t->m_vals.assign(static_cast<size_t>(grid.n()), s);
  t->finish_construction();
  return t;
}

std::shared_ptr<const SymbolTrack> SymbolTrack::from_model(const Grid& grid,
                                                           const ExtensionParams& ext,
                                                           const HerglotzModel& model) {
  if (model.dim() != ext.dim()) throw BadShape("model does not match the extension");
  auto t = std::shared_ptr<SymbolTrack>(new SymbolTrack(grid, ext));
  t->m_model = model;
  t->m_vals.reserve(static_cast<size_t>(grid.n()));
  for (int j = 0; j < grid.n(); ++j) {
    const double x = grid.x(j);
    if (model.near_real_pole(x, tol::pole_floor)) {
      t->m_vals.push_back(char_function_boundary(ext, model, x).m);
    } else {
      t->m_vals.push_back(char_function_on_cut(ext, model, x, CutSide::Above));
    }
  }
  t->finish_construction();
  return t;
}

void SymbolTrack::finish_construction() {
  double sup = 0.0;
  for (const auto& s : m_vals) sup = std::max(sup, s.op_norm());
  // Slack covers ladder estimates taken next to a real pole of M; anything
  // materially above 1 would cost the weighted norm its positivity.
  if (!(sup <= 1.0 + 1e-4)) throw Precondition("symbol track exceeds the contraction bound");
  m_sup_op_norm = sup;
}

VecField SymbolTrack::apply(const VecField& f) const {
  if (!(f.grid() == m_grid) || f.dim() != dim()) throw BadShape("field does not match the track");
  const int n = dim();
  VecField out(m_grid, n);
  for (int j = 0; j < m_grid.n(); ++j) {
    const CMatrix& s = m_vals[static_cast<size_t>(j)];
    for (int r = 0; r < n; ++r) {
      cplx acc(0.0, 0.0);
      for (int c = 0; c < n; ++c) acc += s(r, c) * f.at(c, j);
      out.at(r, j) = acc;
    }
  }
  return out;
}

VecField SymbolTrack::apply_adjoint(const VecField& f) const {
  if (!(f.grid() == m_grid) || f.dim() != dim()) throw BadShape("field does not match the track");
  const int n = dim();
  VecField out(m_grid, n);
  for (int j = 0; j < m_grid.n(); ++j) {
    const CMatrix& s = m_vals[static_cast<size_t>(j)];
    for (int r = 0; r < n; ++r) {
      cplx acc(0.0, 0.0);
      for (int c = 0; c < n; ++c) acc += std::conj(s(c, r)) * f.at(c, j);
      out.at(r, j) = acc;
    }
  }
  return out;
}

CMatrix SymbolTrack::s_upper(cplx z) const {
  if (!(z.imag() > 0.0)) throw WrongHalfPlane("symbol evaluation needs Im z > 0");
  if (m_model) return char_function(m_ext, *m_model, z);
  return m_vals.front();
}

CMatrix SymbolTrack::s_star_lower(cplx z) const {
  if (!(z.imag() < 0.0)) throw WrongHalfPlane("adjoint symbol evaluation needs Im z < 0");
  return s_upper(std::conj(z)).adjoint();
}

CMatrix SymbolTrack::theta_inverse_lower(cplx z) const {
  if (!(z.imag() < 0.0)) throw WrongHalfPlane("theta inverse lives in the lower half plane");
  if (m_model) return theta_inverse(m_ext, *m_model, z);
  const CMatrix id = CMatrix::identity(dim());
  return inverse(id + (m_vals.front().adjoint() - id) * m_ext.chi_plus());
}

CMatrix SymbolTrack::theta_hat_inverse_upper(cplx z) const {
  if (!(z.imag() > 0.0)) throw WrongHalfPlane("theta hat inverse lives in the upper half plane");
  if (m_model) return theta_hat_inverse(m_ext, *m_model, z);
  const CMatrix id = CMatrix::identity(dim());
  return inverse(id + (m_vals.front() - id) * m_ext.chi_minus());
}

double ModelVector::plain_norm() const {
  const double a = gt.norm();
  const double b = g.norm();
  return std::sqrt(a * a + b * b);
}

VecField apply_matrix(const CMatrix& m, const VecField& f) {
  if (!m.square() || m.rows() != f.dim()) throw BadShape("matrix does not match the field");
  const int n = f.dim();
  VecField out(f.grid(), n);
  for (int j = 0; j < f.grid().n(); ++j) {
    for (int r = 0; r < n; ++r) {
      cplx acc(0.0, 0.0);
      for (int c = 0; c < n; ++c) acc += m(r, c) * f.at(c, j);
      out.at(r, j) = acc;
    }
  }
  return out;
}

double model_norm_sq(const ModelVector& v) {
  const SymbolTrack& tr = track_of(v);
  const double a = v.gt.norm();
  const double b = v.g.norm();
  const double cross = 2.0 * tr.apply(v.gt).inner(v.g).real();
  double nsq = a * a + b * b + cross;
  if (nsq < 0.0) {
    const double scale = std::max(a * a + b * b, 1e-300);
    if (nsq >= -tol::tol_norm_rel * scale) return 0.0;
    throw NegativeNorm("weighted norm came out negative; the track is not a contraction");
  }
  return nsq;
}

double model_norm(const ModelVector& v) { return std::sqrt(model_norm_sq(v)); }

cplx model_inner(const ModelVector& a, const ModelVector& b) {
  const SymbolTrack& tr = track_of(a);
  if (a.track != b.track) throw BadShape("model inner product needs a shared track");
  check_pair(tr, b.gt, b.g);
  return a.gt.inner(b.gt) + a.g.inner(b.g) + tr.apply(a.gt).inner(b.g) + a.g.inner(tr.apply(b.gt));
}

ModelVector project_K(const ModelVector& v) {
  const SymbolTrack& tr = track_of(v);
  const VecField u = v.gt + tr.apply_adjoint(v.g);
  const VecField w = tr.apply(v.gt) + v.g;
  ModelVector out;
  out.track = v.track;
  out.gt = v.gt - riesz_project(u, Sign::Plus);
  out.g = v.g - riesz_project(w, Sign::Minus);
  out.source = v.source ? v.source : std::optional<RawPair>(RawPair{v.gt, v.g});
  return out;
}

double k_membership_defect(const ModelVector& v) {
  const SymbolTrack& tr = track_of(v);
  const VecField u = v.gt + tr.apply_adjoint(v.g);
  const VecField w = tr.apply(v.gt) + v.g;
  const double a = riesz_project(u, Sign::Plus).norm();
  const double b = riesz_project(w, Sign::Minus).norm();
  return std::sqrt(a * a + b * b);
}

double smooth_defect(const ModelVector& v, Sign gate) {
  const SymbolTrack& tr = track_of(v);
  const VecField& bgt = v.base_gt();
  const VecField& bg = v.base_g();
  const VecField u = bgt + tr.apply_adjoint(bg);
  const VecField w = tr.apply(bgt) + bg;
  const VecField r = apply_matrix(tr.ext().chi_plus(), u) + apply_matrix(tr.ext().chi_minus(), w);
  return riesz_project(r, gate).norm();
}

std::vector<cplx> analytic_continuation(const VecField& f, Sign cls, cplx z) {
  if (cls == Sign::Minus ? !(z.imag() < 0.0) : !(z.imag() > 0.0))
    throw WrongHalfPlane("continuation point lies in the wrong half plane");
  if (f.edge_mass_fraction() > tol::edge_tol)
    throw EdgeMass("field carries too much mass at the grid edges to continue");
  return cauchy_value(f, cls, z);
}

ModelVector model_resolvent(const ModelVector& v, cplx z) {
  const SymbolTrack& tr = track_of(v);
  if (z.imag() == 0.0) throw WrongHalfPlane("resolvent point must lie off the real axis");
  const double plain = v.plain_norm();
  if (k_membership_defect(v) > tol::k_defect_rel * std::max(plain, 1e-300))
    throw NotInK("resolvent input fails the K membership gate");
  const int n = tr.dim();
  const VecField u0 = v.base_gt() + tr.apply_adjoint(v.base_g());
  const VecField w0 = tr.apply(v.base_gt()) + v.base_g();
  const auto wts = resolvent_weights(tr.grid(), z);
  if (z.imag() < 0.0) {
    const auto uv = cauchy_value(u0, Sign::Minus, z);
    const auto wv = cauchy_value(w0, Sign::Minus, z);
    const auto sw = tr.s_star_lower(z).apply(wv);
    std::vector<cplx> up(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) up[static_cast<size_t>(i)] = uv[i] - sw[i];
    const auto c = (tr.ext().chi_plus() * tr.theta_inverse_lower(z)).apply(up);
    VecField rgt = v.gt.scaled_pointwise(wts);
    VecField rg = field_minus_const(v.g, c).scaled_pointwise(wts);
    return project_K(ModelVector{v.track, std::move(rgt), std::move(rg), std::nullopt});
  }
  const auto wv = cauchy_value(w0, Sign::Plus, z);
  const auto uv = cauchy_value(u0, Sign::Plus, z);
  const auto su = tr.s_upper(z).apply(uv);
  std::vector<cplx> wp(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) wp[static_cast<size_t>(i)] = wv[i] - su[i];
  const auto c = (tr.ext().chi_minus() * tr.theta_hat_inverse_upper(z)).apply(wp);
  VecField rgt = field_minus_const(v.gt, c).scaled_pointwise(wts);
  VecField rg = v.g.scaled_pointwise(wts);
  return project_K(ModelVector{v.track, std::move(rgt), std::move(rg), std::nullopt});
}

double gamma_check(const ModelVector& v, cplx z) {
  const SymbolTrack& tr = track_of(v);
  if (!(z.imag() < 0.0)) throw WrongHalfPlane("gamma check lives in the lower half plane");
  const VecField u = v.base_gt() + tr.apply_adjoint(v.base_g());
  const VecField w = tr.apply(v.base_gt()) + v.base_g();
  if (u.edge_mass_fraction() > tol::edge_tol || w.edge_mass_fraction() > tol::edge_tol)
    throw EdgeMass("continuation input carries too much mass at the grid edges");
  const auto uv = cauchy_value(u, Sign::Minus, z);
  const auto wv = cauchy_value(w, Sign::Minus, z);
  const auto sw = tr.s_star_lower(z).apply(wv);
  const int n = tr.dim();
  std::vector<cplx> arg(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) arg[static_cast<size_t>(i)] = uv[i] - sw[i];
  const auto gamma = (tr.ext().chi_plus() * tr.theta_inverse_lower(z)).apply(arg);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::norm(gamma[i] + wv[i]);
  return std::sqrt(acc);
}

MaskedResult wave_map(WaveKind kind, const ModelVector& v) {
  const SymbolTrack& tr = track_of(v);
  const Grid& gr = tr.grid();
  const int n = tr.dim();
  const bool keep_g = keeps_g(kind);
  VecField kept = keep_g ? v.base_g() : v.base_gt();
  VecField solved(gr, n);
  std::vector<int> masked;
  double live_mass = 0.0, masked_mass = 0.0;
  std::vector<cplx> col(static_cast<size_t>(n));
  for (int j = 0; j < gr.n(); ++j) {
    double point_mass = 0.0;
    for (int i = 0; i < n; ++i) {
      col[static_cast<size_t>(i)] = kept.at(i, j);
      point_mass += std::norm(kept.at(i, j));
    }
    const auto [a, b] = wave_matrices(kind, tr.ext(), tr.value(j));
    const auto ainv = capped_inverse(a);
    if (!ainv) {
      masked.push_back(j);
      masked_mass += point_mass;
      for (int i = 0; i < n; ++i) kept.at(i, j) = cplx(0.0, 0.0);
      continue;
    }
    live_mass += point_mass;
    const auto sol = ainv->apply(b.apply(col));
    for (int i = 0; i < n; ++i) solved.at(i, j) = -sol[static_cast<size_t>(i)];
  }
  if (live_mass == 0.0 && masked_mass > 0.0)
    throw MaskedEverywhere("the whole support of the kept component was masked");
  RawPair raw = keep_g ? RawPair{std::move(solved), std::move(kept)}
                       : RawPair{std::move(kept), std::move(solved)};
  ModelVector pre{v.track, raw.gt, raw.g, std::nullopt};
  return MaskedResult{project_K(pre), std::move(masked)};
}

MaskedResult scattering_map(const ModelVector& v) {
  const SymbolTrack& tr = track_of(v);
  const Grid& gr = tr.grid();
  const int n = tr.dim();
  const CMatrix id = CMatrix::identity(n);
  VecField gt1(gr, n);
  VecField g2(gr, n);
  std::vector<int> masked;
  double live_mass = 0.0, masked_mass = 0.0;
  std::vector<cplx> col(static_cast<size_t>(n));
  for (int j = 0; j < gr.n(); ++j) {
    const VecField& bg = v.base_g();
    double point_mass = 0.0;
    for (int i = 0; i < n; ++i) {
      col[static_cast<size_t>(i)] = bg.at(i, j);
      point_mass += std::norm(bg.at(i, j));
    }
    const CMatrix& s = tr.value(j);
    const CMatrix sst = s.adjoint();
    const auto a1inv = capped_inverse(id + tr.ext().chi_minus() * (s - id));
    const auto a2inv = capped_inverse(id + sst);
    if (!a1inv || !a2inv) {
      masked.push_back(j);
      masked_mass += point_mass;
      continue;
    }
    live_mass += point_mass;
    const CMatrix b1 = id + tr.ext().chi_plus() * (sst - id);
    auto mid = a1inv->apply(b1.apply(col));
    for (auto& x : mid) x = -x;
    const auto out = a2inv->apply((id + s).apply(mid));
    for (int i = 0; i < n; ++i) {
      gt1.at(i, j) = mid[static_cast<size_t>(i)];
      g2.at(i, j) = -out[static_cast<size_t>(i)];
    }
  }
  if (live_mass == 0.0 && masked_mass > 0.0)
    throw MaskedEverywhere("the whole support of the kept component was masked");
  ModelVector pre{v.track, std::move(gt1), std::move(g2), std::nullopt};
  return MaskedResult{project_K(pre), std::move(masked)};
}

ModelVector semigroup_step(const ModelVector& v, double t) {
  const SymbolTrack& tr = track_of(v);
  const Grid& gr = tr.grid();
  std::vector<cplx> ph(static_cast<size_t>(gr.n()));
  for (int j = 0; j < gr.n(); ++j)
    ph[static_cast<size_t>(j)] = std::exp(cplx(0.0, gr.x(j) * t));
  ModelVector pre{v.track, v.base_gt().scaled_pointwise(ph), v.base_g().scaled_pointwise(ph),
                  std::nullopt};
  return project_K(pre);
}

}  // namespace tscat

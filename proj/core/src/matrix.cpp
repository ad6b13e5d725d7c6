#include "tscat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "tscat/errors.hpp"

namespace tscat {

CMatrix::CMatrix(int rows, int cols) : m_rows(rows), m_cols(cols) {
  if (rows < 0 || cols < 0) throw BadShape("negative matrix dimension");
  m_data.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), cplx(0.0, 0.0));
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  m_rows = static_cast<int>(rows.size());
  m_cols = m_rows ? static_cast<int>(rows.begin()->size()) : 0;
  m_data.reserve(static_cast<size_t>(m_rows) * m_cols);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != m_cols) throw BadShape("ragged initializer");
    m_data.insert(m_data.end(), r.begin(), r.end());
  }
}

CMatrix CMatrix::zero(int rows, int cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::identity(int n) { return scaled_identity(n, cplx(1.0, 0.0)); }

CMatrix CMatrix::scaled_identity(int n, cplx s) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

CMatrix CMatrix::diag(const std::vector<cplx>& d) {
  CMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

static void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw BadShape(std::string("shape mismatch in ") + op);
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
  require_same_shape(*this, o, "+");
  CMatrix r(m_rows, m_cols);
  for (size_t i = 0; i < m_data.size(); ++i) r.m_data[i] = m_data[i] + o.m_data[i];
  return r;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
  require_same_shape(*this, o, "-");
  CMatrix r(m_rows, m_cols);
  for (size_t i = 0; i < m_data.size(); ++i) r.m_data[i] = m_data[i] - o.m_data[i];
  return r;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (m_cols != o.m_rows) throw BadShape("shape mismatch in *");
  CMatrix r(m_rows, o.m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int k = 0; k < m_cols; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < o.m_cols; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

CMatrix CMatrix::operator*(cplx s) const {
  CMatrix r(m_rows, m_cols);
  for (size_t i = 0; i < m_data.size(); ++i) r.m_data[i] = m_data[i] * s;
  return r;
}

CMatrix CMatrix::operator-() const { return (*this) * cplx(-1.0, 0.0); }

CMatrix CMatrix::adjoint() const {
  CMatrix r(m_cols, m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

std::vector<cplx> CMatrix::apply(const std::vector<cplx>& x) const {
  if (static_cast<int>(x.size()) != m_cols) throw BadShape("shape mismatch in apply");
  std::vector<cplx> y(static_cast<size_t>(m_rows), cplx(0.0, 0.0));
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) y[static_cast<size_t>(i)] += (*this)(i, j) * x[static_cast<size_t>(j)];
  return y;
}

double CMatrix::max_norm() const {
  double m = 0.0;
  for (const auto& v : m_data) m = std::max(m, std::abs(v));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : m_data) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::op_norm() const {
  if (m_data.empty()) return 0.0;
  const CMatrix gram = adjoint() * (*this);
  const auto ev = hermitian_eigenvalues(gram);
  return std::sqrt(std::max(0.0, ev.back()));
}

bool CMatrix::all_finite() const {
  for (const auto& v : m_data)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

namespace {

struct LuFactors {
  CMatrix lu;             // L below diagonal (unit), U on and above
  std::vector<int> perm;  // row permutation
};

LuFactors lu_factor(const CMatrix& a) {
  const int n = a.rows();
  LuFactors f{a, std::vector<int>(static_cast<size_t>(n))};
  for (int i = 0; i < n; ++i) f.perm[static_cast<size_t>(i)] = i;
  const double floor = tol::pivot_floor_rel * std::max(a.max_norm(), 1e-300);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(f.lu(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(f.lu(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < floor) throw SingularMatrix("pivot below floor in solve");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[static_cast<size_t>(k)], f.perm[static_cast<size_t>(piv)]);
    }
    const cplx pk = f.lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      const cplx lik = f.lu(i, k) / pk;
      f.lu(i, k) = lik;
      for (int j = k + 1; j < n; ++j) f.lu(i, j) -= lik * f.lu(k, j);
    }
  }
  return f;
}

CMatrix lu_solve(const LuFactors& f, const CMatrix& b) {
  const int n = f.lu.rows();
  const int m = b.cols();
  CMatrix x(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = b(f.perm[static_cast<size_t>(i)], j);
  // forward substitution with unit L
  for (int k = 0; k < n; ++k)
    for (int i = k + 1; i < n; ++i) {
      const cplx lik = f.lu(i, k);
      if (lik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < m; ++j) x(i, j) -= lik * x(k, j);
    }
  // back substitution with U
  for (int k = n - 1; k >= 0; --k) {
    const cplx ukk = f.lu(k, k);
    for (int j = 0; j < m; ++j) x(k, j) /= ukk;
    for (int i = 0; i < k; ++i) {
      const cplx uik = f.lu(i, k);
      if (uik == cplx(0.0, 0.0)) continue;
      for (int j = 0; j < m; ++j) x(i, j) -= uik * x(k, j);
    }
  }
  return x;
}

}  // namespace

CMatrix solve(const CMatrix& a, const CMatrix& b) {
  if (!a.square()) throw BadShape("solve needs a square matrix");
  if (a.rows() != b.rows()) throw BadShape("shape mismatch in solve");
  if (!a.all_finite() || !b.all_finite()) throw Precondition("non-finite entries in solve");
  const LuFactors f = lu_factor(a);
  CMatrix x = lu_solve(f, b);
  // one refinement step on the residual
  const CMatrix r = b - a * x;
  x = x + lu_solve(f, r);
  const double gate =
      tol::tol_solve * (a.max_norm() * std::max(x.max_norm(), 1.0) + b.max_norm() + 1e-300);
  if ((b - a * x).max_norm() > gate)
    throw SingularMatrix("solve residual above gate (ill-conditioned system)");
  return x;
}

CMatrix inverse(const CMatrix& a) { return solve(a, CMatrix::identity(a.rows())); }

double herm_defect(const CMatrix& a) {
  if (!a.square()) throw BadShape("herm_defect needs a square matrix");
  return (a - a.adjoint()).max_norm();
}

std::vector<double> hermitian_eigenvalues(const CMatrix& a) {
  if (!a.square()) throw BadShape("hermitian_eigenvalues needs a square matrix");
  const int n = a.rows();
  CMatrix h = (a + a.adjoint()) * cplx(0.5, 0.0);
  const double scale = std::max(h.max_norm(), 1e-300);
  // cyclic Jacobi on the Hermitian matrix; eigenvalues only
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(h(p, q)));
    if (off < 1e-15 * scale) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx hpq = h(p, q);
        const double r = std::abs(hpq);
        if (r < 1e-18 * scale) continue;
        const cplx phase = hpq / r;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = std::conj(phase) * (t * c);
        // rows/cols p and q rotate; everything else is untouched
        for (int j = 0; j < n; ++j) {
          const cplx hpj = h(p, j), hqj = h(q, j);
          h(p, j) = c * hpj - std::conj(s) * hqj;
          h(q, j) = s * hpj + c * hqj;
        }
        for (int i = 0; i < n; ++i) {
          const cplx hip = h(i, p), hiq = h(i, q);
          h(i, p) = c * hip - s * hiq;
          h(i, q) = std::conj(s) * hip + c * hiq;
        }
      }
  }
  std::vector<double> ev(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

double psd_defect(const CMatrix& a) {
  const auto ev = hermitian_eigenvalues(a);
  if (ev.empty()) return 0.0;
  return std::max(0.0, -ev.front());
}

}  // namespace tscat

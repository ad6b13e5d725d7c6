#include "tscat/grid.hpp"

#include <cmath>

#include "tscat/errors.hpp"
#include "tscat/fft.hpp"

namespace tscat {

Grid Grid::make(int n, double l) {
  if (n < 256 || !is_power_of_two(static_cast<size_t>(n)))
    throw Precondition("grid size must be a power of two, at least 256");
  if (!(l > 0.0) || !std::isfinite(l)) throw Precondition("grid half-length must be positive");
  return Grid(n, l);
}

VecField::VecField(const Grid& grid, int dim) : m_grid(grid), m_dim(dim) {
  if (dim < 1 || dim > 16) throw BadShape("field dimension out of range");
  m_v.assign(static_cast<size_t>(dim) * grid.n(), cplx(0.0, 0.0));
}

VecField VecField::operator+(const VecField& o) const {
  if (!(m_grid == o.m_grid) || m_dim != o.m_dim) throw BadShape("field shape mismatch");
  VecField r = *this;
  for (size_t i = 0; i < m_v.size(); ++i) r.m_v[i] += o.m_v[i];
  return r;
}

VecField VecField::operator-(const VecField& o) const {
  if (!(m_grid == o.m_grid) || m_dim != o.m_dim) throw BadShape("field shape mismatch");
  VecField r = *this;
  for (size_t i = 0; i < m_v.size(); ++i) r.m_v[i] -= o.m_v[i];
  return r;
}

VecField VecField::operator*(cplx s) const {
  VecField r = *this;
  for (auto& v : r.m_v) v *= s;
  return r;
}

VecField VecField::operator-() const { return *this * cplx(-1.0, 0.0); }

double VecField::norm() const {
  double acc = 0.0;
  for (const auto& v : m_v) acc += std::norm(v);
  return std::sqrt(acc * m_grid.dx());
}

cplx VecField::inner(const VecField& o) const {
  if (!(m_grid == o.m_grid) || m_dim != o.m_dim) throw BadShape("field shape mismatch");
  cplx acc(0.0, 0.0);
  for (size_t i = 0; i < m_v.size(); ++i) acc += m_v[i] * std::conj(o.m_v[i]);
  return acc * m_grid.dx();
}

double VecField::edge_mass_fraction() const {
  const int n = m_grid.n();
  const int edge = std::max(1, n / 20);
  double total = 0.0, outer = 0.0;
  for (int c = 0; c < m_dim; ++c) {
    for (int j = 0; j < n; ++j) {
      const double m = std::norm(at(c, j));
      total += m;
      if (j < edge || j >= n - edge) outer += m;
    }
  }
  if (total <= 0.0) return 0.0;
  return outer / total;
}

VecField VecField::scaled_pointwise(const std::vector<cplx>& w) const {
  if (static_cast<int>(w.size()) != m_grid.n()) throw BadShape("weight length mismatch");
  VecField r = *this;
  for (int c = 0; c < m_dim; ++c)
    for (int j = 0; j < m_grid.n(); ++j) r.at(c, j) *= w[j];
  return r;
}

bool VecField::all_finite() const {
  for (const auto& v : m_v)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

VecField riesz_project(const VecField& f, Sign sign) {
  const int n = f.grid().n();
  VecField out(f.grid(), f.dim());
  std::vector<cplx> buf(static_cast<size_t>(n));
  for (int c = 0; c < f.dim(); ++c) {
    for (int j = 0; j < n; ++j) buf[j] = f.at(c, j);
    fft_forward(buf);
    // Bins 0..N/2-1 carry frequencies 0..(N/2-1) * pi/L, bins N/2..N-1 the
    // negative ones.  Zero the half that does not belong to the class.
    if (sign == Sign::Plus) {
      for (int m = n / 2; m < n; ++m) buf[m] = cplx(0.0, 0.0);
    } else {
      for (int m = 0; m < n / 2; ++m) buf[m] = cplx(0.0, 0.0);
    }
    fft_inverse(buf);
    for (int j = 0; j < n; ++j) out.at(c, j) = buf[j];
  }
  return out;
}

}  // namespace tscat

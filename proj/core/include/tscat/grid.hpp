#ifndef TSCAT_GRID_HPP
#define TSCAT_GRID_HPP

#include <complex>
#include <vector>

#include "tscat/matrix.hpp"

namespace tscat {

/// Which Hardy class / half-plane an operation refers to.
enum class Sign { Plus, Minus };

/// Uniform grid x_j = -L + j (2L/N), j = 0..N-1, with DFT frequencies
/// omega_m = pi m / L, m = -N/2..N/2-1.  N is a power of two so the
/// projections are exact complementary bin masks.
class Grid {
 public:
  static Grid make(int n, double l);

  int n() const noexcept { return m_n; }
  double l() const noexcept { return m_l; }
  double dx() const noexcept { return 2.0 * m_l / m_n; }
  double x(int j) const noexcept { return -m_l + j * dx(); }

  bool operator==(const Grid& o) const noexcept { return m_n == o.m_n && m_l == o.m_l; }

 private:
  Grid(int n, double l) : m_n(n), m_l(l) {}
  int m_n = 0;
  double m_l = 0.0;
};

/// E-valued grid function: dim components, each sampled on the grid.
/// Component-major storage so each component is FFT-contiguous.
class VecField {
 public:
  VecField() = default;
  VecField(const Grid& grid, int dim);

  const Grid& grid() const noexcept { return m_grid; }
  int dim() const noexcept { return m_dim; }

  cplx& at(int c, int j) { return m_v[static_cast<size_t>(c) * m_grid.n() + j]; }
  const cplx& at(int c, int j) const { return m_v[static_cast<size_t>(c) * m_grid.n() + j]; }

  VecField operator+(const VecField& o) const;
  VecField operator-(const VecField& o) const;
  VecField operator*(cplx s) const;
  VecField operator-() const;

  /// L2 norm, sqrt(dx sum ||f_j||^2)
  double norm() const;
  /// <f, g> = dx sum_j <f_j, g_j>_E, conjugate-linear in g
  cplx inner(const VecField& o) const;

  /// fraction of the L2 mass sitting on the outer 5% of the grid
  double edge_mass_fraction() const;

  /// pointwise multiply every component by w(x_j)
  VecField scaled_pointwise(const std::vector<cplx>& w) const;

  bool all_finite() const;

  std::vector<cplx>& raw() noexcept { return m_v; }
  const std::vector<cplx>& raw() const noexcept { return m_v; }

 private:
  Grid m_grid = Grid::make(256, 1.0);
  int m_dim = 0;
  std::vector<cplx> m_v;
};

/// Hardy projection P_+ / P_- as an exact frequency-bin mask: the
/// nonnegative-frequency bins (DC included) belong to Plus, the strictly
/// negative ones (Nyquist included) to Minus.  P_+ + P_- = I identically.
VecField riesz_project(const VecField& f, Sign sign);

}  // namespace tscat

#endif

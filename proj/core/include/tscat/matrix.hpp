#ifndef TSCAT_MATRIX_HPP
#define TSCAT_MATRIX_HPP

#include <complex>
#include <initializer_list>
#include <vector>

namespace tscat {

using cplx = std::complex<double>;

/// Dense complex matrix, row major.  Sizes in this library are tiny (boundary
/// spaces of dimension <= 16), so everything below is plain O(n^3) dense code
/// with no blocking.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix zero(int rows, int cols);
  static CMatrix identity(int n);
  static CMatrix diag(const std::vector<cplx>& d);
  /// identity scaled by s
  static CMatrix scaled_identity(int n, cplx s);

  int rows() const noexcept { return m_rows; }
  int cols() const noexcept { return m_cols; }
  bool square() const noexcept { return m_rows == m_cols; }

  cplx& operator()(int r, int c) { return m_data[static_cast<size_t>(r) * m_cols + c]; }
  const cplx& operator()(int r, int c) const { return m_data[static_cast<size_t>(r) * m_cols + c]; }

  CMatrix operator+(const CMatrix& o) const;
  CMatrix operator-(const CMatrix& o) const;
  CMatrix operator*(const CMatrix& o) const;
  CMatrix operator*(cplx s) const;
  CMatrix operator-() const;
  friend CMatrix operator*(cplx s, const CMatrix& a) { return a * s; }

  CMatrix adjoint() const;

  std::vector<cplx> apply(const std::vector<cplx>& x) const;

  /// largest entry magnitude
  double max_norm() const;
  double frobenius_norm() const;
  /// spectral norm, via the Hermitian eigenproblem for a* a
  double op_norm() const;
  bool all_finite() const;

  const std::vector<cplx>& data() const noexcept { return m_data; }

 private:
  int m_rows = 0;
  int m_cols = 0;
  std::vector<cplx> m_data;
};

/// Solve a x = b for x (b may have several columns).  Row-pivoted elimination;
/// a pivot below pivot_floor_rel * max|a_ij| reports SingularMatrix rather than
/// dividing through.  One step of iterative refinement is applied, which is
/// enough to keep residuals near machine precision at these sizes.
CMatrix solve(const CMatrix& a, const CMatrix& b);

CMatrix inverse(const CMatrix& a);

/// ||a - a*||_max
double herm_defect(const CMatrix& a);

/// max(0, -lambda_min) of the Hermitian part of a.  The input must already be
/// Hermitian up to tol_herm; the Hermitian part is taken to shed roundoff.
double psd_defect(const CMatrix& a);

/// Eigenvalues of the Hermitian part, ascending.  Cyclic Jacobi sweeps.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

namespace tol {
/// residual gate for solve(): ||a x - b||_max <= tol_solve * (||a||_max ||x||_max + ||b||_max)
inline constexpr double tol_solve = 1e-10;
/// relative pivot floor for singularity detection in solve()
inline constexpr double pivot_floor_rel = 1e-13;
/// Hermiticity gate used by preconditions
inline constexpr double tol_herm = 1e-10;
}  // namespace tol

}  // namespace tscat

#endif

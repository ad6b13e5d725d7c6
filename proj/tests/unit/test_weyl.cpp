#include "tscat/weyl.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "support/testgen.hpp"
#include "tscat/branch.hpp"
#include "tscat/errors.hpp"

using namespace tscat;
using testsupport::max_diff;

namespace {

HerglotzModel sample_lead() {
  CMatrix w(2, 2);
  w(0, 0) = cplx(1.0, 0.0);
  w(1, 1) = cplx(0.5, 0.0);
  CMatrix v(2, 2);
  v(0, 0) = cplx(0.3, 0.0);
  v(0, 1) = cplx(0.1, 0.2);
  v(1, 0) = cplx(0.1, -0.2);
  v(1, 1) = cplx(-0.4, 0.0);
  CMatrix a1(2, 2);
  a1(0, 0) = cplx(1.0, 0.0);
  a1(0, 1) = cplx(0.5, 0.0);
  a1(1, 0) = cplx(0.5, 0.0);
  a1(1, 1) = cplx(0.5, 0.0);
  CMatrix a2 = CMatrix::diag({cplx(0.2, 0.0), cplx(0.7, 0.0)});
  return HerglotzModel::lead_rational(w, v, {{2.0, a1}, {-1.5, a2}});
}

}  // namespace

TEST_CASE("star graph matches i sqrt(z) on both half-planes and the cut") {
  const auto m = HerglotzModel::star_graph(3);
  CHECK(m.dim() == 3);
  for (const cplx z : {cplx(1.0, 1.0), cplx(-2.0, 0.5), cplx(3.0, -2.0)}) {
    const CMatrix got = m.eval(z);
    const cplx want = cplx(0.0, 1.0) * sqrt_upper(z);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(got(i, i) - want) < 1e-14 * (1.0 + std::abs(want)));
      for (int j = 0; j < 3; ++j)
        if (i != j) CHECK(std::abs(got(i, j)) == 0.0);
    }
  }
  CHECK(std::abs(m.eval(cplx(4.0, 0.0), CutSide::Above)(0, 0) - cplx(0.0, 2.0)) < 1e-14);
  CHECK(std::abs(m.eval(cplx(4.0, 0.0), CutSide::Below)(0, 0) + cplx(0.0, 2.0)) < 1e-14);
  CHECK(std::abs(m.eval(cplx(-4.0, 0.0))(0, 0) - cplx(-2.0, 0.0)) < 1e-14);
}

TEST_CASE("reflection law M(conj z) = M(z)* across the catalog") {
  auto gen = testsupport::rng(11);
  const auto models = {HerglotzModel::star_graph(2), sample_lead(), HerglotzModel::interval(3.1)};
  for (const auto& m : models) {
    for (const cplx z : testsupport::half_plane_grid(gen, 30, 1.0)) {
      CHECK(max_diff(m.eval(std::conj(z)), m.eval(z).adjoint()) < 1e-10);
    }
  }
}

TEST_CASE("herglotz validation passes on the catalog") {
  auto gen = testsupport::rng(12);
  const auto grid = testsupport::half_plane_grid(gen, 100, 1.0);
  for (const auto& m : {HerglotzModel::star_graph(1), HerglotzModel::star_graph(5), sample_lead(),
                        HerglotzModel::interval(2.0)}) {
    const auto rep = validate_herglotz(m, grid);
    CHECK(rep.pass);
    CHECK(rep.max_reflection_defect < tol::tol_herglotz);
    CHECK(rep.min_im_eigenvalue > -tol::tol_herglotz);
  }
}

TEST_CASE("herglotz validation flags a planted negative residue") {
  CMatrix w = CMatrix::identity(1);
  CMatrix v(1, 1);
  CMatrix bad(1, 1);
  bad(0, 0) = cplx(-1.0, 0.0);
  const auto broken = HerglotzModel::lead_rational_unchecked(w, v, {{0.5, bad}});
  auto gen = testsupport::rng(13);
  const auto rep = validate_herglotz(broken, testsupport::half_plane_grid(gen, 100, 1.0));
  CHECK_FALSE(rep.pass);
  CHECK(rep.min_im_eigenvalue < 0.0);
}

TEST_CASE("lead_rational construction rejects broken data") {
  CMatrix w = CMatrix::identity(2);
  CMatrix v(2, 2);
  CMatrix good = CMatrix::identity(2);
  CMatrix nonherm(2, 2);
  nonherm(0, 1) = cplx(1.0, 0.0);
  CMatrix negative = CMatrix::diag({cplx(-1.0, 0.0), cplx(1.0, 0.0)});

  CHECK_THROWS_AS((void)HerglotzModel::lead_rational(nonherm, v, {{1.0, good}}), NotHermitian);
  CHECK_THROWS_AS((void)HerglotzModel::lead_rational(w, v, {{1.0, nonherm}}), NotHermitian);
  CHECK_THROWS_AS((void)HerglotzModel::lead_rational(w, v, {{1.0, negative}}), Precondition);
  CHECK_THROWS_AS((void)HerglotzModel::lead_rational(w, v, {{1.0, good}, {1.0, good}}),
                  Precondition);
}

TEST_CASE("poles are detected and guarded") {
  const auto lead = sample_lead();
  CHECK(lead.near_real_pole(2.0, tol::pole_floor));
  CHECK(lead.near_real_pole(2.0 + 1e-10, tol::pole_floor));
  CHECK_FALSE(lead.near_real_pole(2.1, tol::pole_floor));
  CHECK_THROWS_AS((void)lead.eval(cplx(2.0, 0.0), CutSide::Above), AtPole);

  const auto box = HerglotzModel::interval(3.14159265358979323846);
  CHECK(box.near_real_pole(1.0, 1e-6));
  CHECK(box.near_real_pole(4.0, 1e-5));
  CHECK_FALSE(box.near_real_pole(2.5, 1e-6));
}

TEST_CASE("interval model is continuous through the small-argument guard") {
  const auto box = HerglotzModel::interval(2.0);
  // the first point lands inside the series fallback, the second uses the
  // closed form; the two must agree at the joint
  const CMatrix tiny = box.eval(cplx(1e-18, 1e-18));
  const CMatrix small = box.eval(cplx(1e-8, 1e-8));
  CHECK(max_diff(tiny, small) < 1e-3);
}

TEST_CASE("richardson ladder recovers the limit of a smooth boundary family") {
  // f(eps) = c0 + c1 eps + c2 eps^2 has exact two-point extrapolant c0 up to
  // the quadratic term; the ladder's estimate must reflect the residual.
  const CMatrix c0 = CMatrix::diag({cplx(1.0, -2.0)});
  const CMatrix c1 = CMatrix::diag({cplx(0.7, 0.1)});
  const CMatrix c2 = CMatrix::diag({cplx(-0.3, 0.4)});
  auto f = [&](double e) { return c0 + c1 * cplx(e, 0.0) + c2 * cplx(e * e, 0.0); };
  const auto bv = richardson_boundary(f, default_eps_ladder());
  CHECK(max_diff(bv.m, c0) < 1e-8);
  CHECK(bv.convergence_estimate < 1e-6);
}

TEST_CASE("boundary values of the star model match the closed form") {
  const auto m = HerglotzModel::star_graph(1);
  const auto above = boundary_value(m, 9.0);
  CHECK(std::abs(above.m(0, 0) - cplx(0.0, 3.0)) < 1e-6);
  const auto neg = boundary_value(m, -9.0);
  CHECK(std::abs(neg.m(0, 0) - cplx(-3.0, 0.0)) < 1e-6);
  CHECK_THROWS_AS((void)boundary_value(sample_lead(), 2.0), AtPole);
}

TEST_CASE("extension data derives its matrices consistently") {
  auto gen = testsupport::rng(14);
  const CMatrix kappa = testsupport::random_hermitian(gen, 3);
  const auto ext = ExtensionParams::with_sqrt2_alpha(kappa);
  CHECK(ext.dim() == 3);
  CHECK(ext.kappa_is_hermitian());
  CHECK(ext.alpha_is_sqrt2_identity());
  // b_kappa = alpha kappa alpha / 2 = kappa at alpha = sqrt2 I
  CHECK(max_diff(ext.b_kappa(), kappa) < 1e-12);
  // chi+ + chi- = I and chi+ - chi- = i kappa
  CHECK(max_diff(ext.chi_plus() + ext.chi_minus(), CMatrix::identity(3)) < 1e-14);
  CHECK(max_diff(ext.chi_plus() - ext.chi_minus(), kappa * cplx(0.0, 1.0)) < 1e-14);
  // the dissipative reference and its adjoint
  CHECK(max_diff(ext.b_ref(), CMatrix::scaled_identity(3, cplx(0.0, 1.0))) < 1e-12);
  CHECK(max_diff(ext.b_ref_adj(), CMatrix::scaled_identity(3, cplx(0.0, -1.0))) < 1e-12);

  const auto zero = ext.zero_kappa();
  CHECK(zero.kappa().max_norm() == 0.0);
  CHECK(max_diff(zero.alpha(), ext.alpha()) == 0.0);

  CHECK_THROWS_AS((void)ExtensionParams::with_sqrt2_alpha(CMatrix(2, 3)), BadShape);
}

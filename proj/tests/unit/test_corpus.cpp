#include "tscat/corpus.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "support/testgen.hpp"
#include "tscat/errors.hpp"
#include "tscat/hardy.hpp"

using namespace tscat;

namespace {

double wrong_side_fraction(const VecField& f, Sign cls) {
  const Sign other = (cls == Sign::Plus) ? Sign::Minus : Sign::Plus;
  return riesz_project(f, other).norm() / f.norm();
}

}  // namespace

TEST_CASE("rational fields live on their assigned side of the spectrum") {
  const Grid gr = Grid::make(2048, 40.0);
  for (unsigned seed : {11u, 12u, 13u}) {
    const VecField fp = corpus::rational_hardy(gr, 2, Sign::Plus, seed);
    const VecField fm = corpus::rational_hardy(gr, 2, Sign::Minus, seed + 100);
    CHECK(wrong_side_fraction(fp, Sign::Plus) < 1e-4);
    CHECK(wrong_side_fraction(fm, Sign::Minus) < 1e-4);
  }
}

TEST_CASE("rational fields are deterministic in the seed") {
  const Grid gr = Grid::make(256, 10.0);
  const VecField a = corpus::rational_hardy(gr, 1, Sign::Plus, 42);
  const VecField b = corpus::rational_hardy(gr, 1, Sign::Plus, 42);
  const VecField c = corpus::rational_hardy(gr, 1, Sign::Plus, 43);
  CHECK((a - b).norm() == 0.0);
  CHECK((a - c).norm() > 1e-6);
}

TEST_CASE("rational field options are validated") {
  const Grid gr = Grid::make(256, 10.0);
  corpus::RationalOpts bad_zero;
  bad_zero.zero_order = 4;  // would cancel all decay
  CHECK_THROWS_AS((void)corpus::rational_hardy(gr, 1, Sign::Plus, 1, bad_zero), Precondition);
  corpus::RationalOpts bad_im;
  bad_im.min_im = 0.0;
  CHECK_THROWS_AS((void)corpus::rational_hardy(gr, 1, Sign::Plus, 1, bad_im), Precondition);
}

TEST_CASE("gaussian fields evaluate the stated formula") {
  const Grid gr = Grid::make(256, 10.0);
  const double omega = 1.7, width = 3.0;
  const VecField f = corpus::gaussian_field(gr, {{omega, 0.5, width, 1, cplx(2.0, -1.0)}});
  const int j = 77;
  const double x = gr.x(j);
  const double t = (x - 0.5) / width;
  const cplx want = cplx(2.0, -1.0) * x * std::exp(-t * t) *
                    std::exp(cplx(0.0, omega * x));
  CHECK(std::abs(f.at(0, j) - want) < 1e-14 * std::abs(want));
  // zero_order pins a zero at the origin
  CHECK(f.at(0, gr.n() / 2) == cplx(0.0, 0.0));
}

TEST_CASE("make_in_k produces near-members of K on strict contraction tracks") {
  const Grid gr = Grid::make(1024, 40.0);
  auto gen = testsupport::rng(801);
  const auto ext = ExtensionParams::with_sqrt2_alpha(testsupport::random_hermitian(gen, 2));
  const auto tr = SymbolTrack::constant(gr, ext, testsupport::random_contraction(gen, 2, 0.7));
  const ModelVector v = corpus::make_in_k(tr, corpus::rational_hardy(gr, 2, Sign::Plus, 802),
                                          corpus::rational_hardy(gr, 2, Sign::Minus, 803));
  CHECK(k_membership_defect(v) < 1e-4 * v.plain_norm());
}

TEST_CASE("make_in_k refuses tracks whose symbol touches the unit sphere") {
  const auto ext = ExtensionParams::with_sqrt2_alpha(CMatrix::diag({cplx(1.0, 0.0)}));
  const auto tr =
      SymbolTrack::from_model(Grid::make(512, 20.0), ext, HerglotzModel::star_graph(1));
  const Grid& gr = tr->grid();
  CHECK_THROWS_AS(
      (void)corpus::make_in_k(tr, corpus::rational_hardy(gr, 1, Sign::Plus, 804),
                              corpus::rational_hardy(gr, 1, Sign::Minus, 805)),
      Precondition);
}

TEST_CASE("make_smooth solves the pointwise relation it claims") {
  const auto ext = ExtensionParams::with_sqrt2_alpha(CMatrix::diag({cplx(1.0, 0.0)}));
  const auto tr =
      SymbolTrack::from_model(Grid::make(1024, 40.0), ext, HerglotzModel::star_graph(1));
  const Grid& gr = tr->grid();
  const VecField g = corpus::gaussian_field(gr, {{0.6, 0.0, 6.0, 0, cplx(1.0, 0.0)}});

  const ModelVector v = corpus::make_smooth(tr, g, true);
  CHECK((v.g - g).norm() == 0.0);
  const cplx chip = ext.chi_plus()(0, 0);
  const cplx chim = ext.chi_minus()(0, 0);
  double worst = 0.0;
  for (int j = 0; j < gr.n(); ++j) {
    const cplx s = tr->value(j)(0, 0);
    const cplx lhs = (chip + chim * s) * v.gt.at(0, j);
    const cplx rhs = -(chip * std::conj(s) + chim) * v.g.at(0, j);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  CHECK(worst < 1e-12 * g.norm());
}

TEST_CASE("paired smooth constructions share the free component") {
  const auto ext = ExtensionParams::with_sqrt2_alpha(CMatrix::diag({cplx(1.0, 0.0)}));
  const auto tr =
      SymbolTrack::from_model(Grid::make(1024, 40.0), ext, HerglotzModel::star_graph(1));
  const VecField g = corpus::gaussian_field(tr->grid(), {{0.5, 0.0, 6.0, 2, cplx(1.0, 0.0)}});
  const auto pair = corpus::make_smooth_pair(tr, g);
  CHECK((pair.v_kappa.g - pair.v_zero.g).norm() == 0.0);
  CHECK((pair.v_kappa.gt - pair.v_zero.gt).norm() > 1e-8);
}

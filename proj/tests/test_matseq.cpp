#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eginv/matseq.hpp"
#include "eginv/rng.hpp"

using namespace eginv;

namespace {

MatSeq random_seq(Rng& rng, int rows, int cols, int lo, int hi) {
  MatSeq f(rows, cols);
  for (int j = lo; j <= hi; ++j) {
    CMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = rng.cgaussian();
    f.set_coeff(j, std::move(m));
  }
  return f;
}

}  // namespace

TEST_CASE("unit sequence is a two-sided unit") {
  Rng rng(11);
  const MatSeq f = random_seq(rng, 3, 3, -2, 4);
  CHECK(dist(conv(f, MatSeq::unit(3)), f) == 0.0);
  CHECK(dist(conv(MatSeq::unit(3), f), f) == 0.0);
}

TEST_CASE("shift cancellation: z times z^-1") {
  MatSeq zp(2, 2), zm(2, 2);
  zp.set_coeff(1, CMat::Identity(2, 2));
  zm.set_coeff(-1, CMat::Identity(2, 2));
  CHECK(dist(conv(zp, zm), MatSeq::unit(2)) == 0.0);
}

TEST_CASE("convolution matches pointwise products on the unit circle") {
  // Independent oracle: evaluate both factors at 16 roots of unity and
  // compare against the evaluated product.
  Rng rng(12);
  const MatSeq f = random_seq(rng, 2, 3, 0, 3);
  const MatSeq g = random_seq(rng, 3, 2, -3, 0);
  const MatSeq fg = conv(f, g);
  for (int k = 0; k < 16; ++k) {
    const Complex z = std::polar(1.0, 2.0 * M_PI * k / 16.0);
    CHECK((evaluate(fg, z) - evaluate(f, z) * evaluate(g, z)).norm() < 1e-12);
  }
}

TEST_CASE("adjoint reflects and conjugates coefficients") {
  CHECK(dist(adjoint(MatSeq::unit(3)), MatSeq::unit(3)) == 0.0);

  Rng rng(13);
  CMat a(2, 3);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = rng.cgaussian();
  MatSeq f(2, 3);
  f.set_coeff(2, a);
  const MatSeq fs = adjoint(f);
  CHECK(fs.rows == 3);
  CHECK(fs.cols == 2);
  CHECK((fs.coeff(-2) - a.adjoint()).norm() == 0.0);
  CHECK(fs.coeff(2).norm() == 0.0);

  const MatSeq g = random_seq(rng, 3, 2, -4, 4);
  CHECK(dist(adjoint(adjoint(g)), g) == 0.0);
}

TEST_CASE("signed-space projections partition the support") {
  Rng rng(14);
  const MatSeq f = random_seq(rng, 2, 2, -4, 4);
  CHECK(dist(project(f, SeqSpaceTag::WPlus) + project(f, SeqSpaceTag::WMinus0), f) == 0.0);
  CHECK(dist(project(f, SeqSpaceTag::WMinus) + project(f, SeqSpaceTag::WPlus0), f) == 0.0);
  CHECK(project(f, SeqSpaceTag::Wd).hi() == 0);
  CHECK(project(f, SeqSpaceTag::Wd).lo() == 0);

  // Support reflection under the involution.
  CHECK(dist(project(adjoint(f), SeqSpaceTag::WPlus0), adjoint(project(f, SeqSpaceTag::WMinus0))) == 0.0);

  const MatSeq once = project(f, SeqSpaceTag::WPlus0);
  CHECK(dist(project(once, SeqSpaceTag::WPlus0), once) == 0.0);
}

TEST_CASE("shift moves coefficients") {
  Rng rng(15);
  const MatSeq f = random_seq(rng, 2, 2, -2, 2);
  CHECK(dist(shift(f, 0), f) == 0.0);
  CHECK(dist(shift(shift(f, 1), -1), f) == 0.0);
  CHECK(shift(f, 3).lo() == f.lo() + 3);
}

TEST_CASE("associativity and adjoint anti-homomorphism") {
  Rng rng(16);
  const MatSeq f = random_seq(rng, 2, 3, -4, 4);
  const MatSeq g = random_seq(rng, 3, 3, -4, 4);
  const MatSeq h = random_seq(rng, 3, 2, -4, 4);
  CHECK(dist(conv(conv(f, g), h), conv(f, conv(g, h))) < 1e-12);
  CHECK(dist(adjoint(conv(f, g)), conv(adjoint(g), adjoint(f))) < 1e-12);
}

TEST_CASE("determinant agrees with pointwise determinants") {
  Rng rng(17);
  for (int n : {1, 2, 3}) {
    const MatSeq f = random_seq(rng, n, n, -2, 2);
    const MatSeq d = seq_det(f);
    for (int k = 0; k < 8; ++k) {
      const Complex z = std::polar(1.0, 2.0 * M_PI * k / 8.0);
      const Complex lhs = evaluate(d, z)(0, 0);
      const Complex rhs = evaluate(f, z).determinant();
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}

TEST_CASE("dimension mismatches are rejected") {
  CHECK_THROWS_AS(conv(MatSeq::zero(2, 3), MatSeq::zero(2, 3)), Error);
  CHECK_THROWS_AS(MatSeq::zero(2, 2) + MatSeq::zero(2, 3), Error);
}

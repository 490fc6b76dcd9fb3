#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eginv/fixtures.hpp"
#include "eginv/solver.hpp"

using namespace eginv;

namespace {
const AlgebraInstance kMat3 = AlgebraInstance::triangular(3);
const AlgebraInstance kSeq22 = AlgebraInstance::sequence(2, 2);
}  // namespace

TEST_CASE("unit symbols compress to identity matrices") {
  for (const auto& inst : {kMat3, kSeq22}) {
    const int w = 3;
    const BlockOperator t = toeplitz_op(inst, unit_of(inst, SymbolRole::A), SymbolRole::A, Sign::Plus, w);
    CHECK(deviation_from_identity(t) == 0.0);
    const BlockOperator tm = toeplitz_op(inst, unit_of(inst, SymbolRole::D), SymbolRole::D, Sign::Minus, w);
    CHECK(deviation_from_identity(tm) == 0.0);
  }
}

TEST_CASE("scalar shift symbol gives the coefficient shift matrix") {
  const AlgebraInstance inst = AlgebraInstance::sequence(1, 1);
  MatSeq z(1, 1);
  z.set_coeff(1, CMat::Identity(1, 1));
  const Space dom = single_part_space(inst, PartTag::APlus, 3);
  const Space cod = single_part_space(inst, PartTag::APlus, 4);
  const BlockOperator t = compression(inst, z, SymbolRole::A, dom, cod);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 4; ++c) CHECK(t.matrix(r, c) == (r == c + 1 ? Complex(1, 0) : Complex(0, 0)));
  // On matched windows the image needs one more coefficient.
  CHECK_THROWS_AS(compression(inst, z, SymbolRole::A, dom, dom), Error);
}

TEST_CASE("one-sided symbols have vanishing crossed compressions") {
  Rng rng(31);
  for (const auto& inst : {kMat3, kSeq22}) {
    const int deg = inst.kind == AlgebraKind::Sequence ? 3 : 0;
    const int w = 4;
    const MatSeq a_plus = random_part_element(inst, rng, PartTag::APlus, deg);
    CHECK(fro_norm(hankel_op(inst, a_plus, SymbolRole::A, Sign::Minus, w)) == 0.0);
    const MatSeq b_plus = random_part_element(inst, rng, PartTag::BPlus, deg);
    CHECK(fro_norm(hankel_op(inst, b_plus, SymbolRole::B, Sign::Minus, w)) == 0.0);
    const MatSeq c_minus = random_part_element(inst, rng, PartTag::CMinus, deg);
    CHECK(fro_norm(hankel_op(inst, c_minus, SymbolRole::C, Sign::Plus, w)) == 0.0);
    const MatSeq d_minus = random_part_element(inst, rng, PartTag::DMinus, deg);
    CHECK(fro_norm(hankel_op(inst, d_minus, SymbolRole::D, Sign::Plus, w)) == 0.0);
  }
}

TEST_CASE("the plus Hankel compression applied to the unit recovers the symbol") {
  Rng rng(32);
  for (const auto& inst : {kMat3, kSeq22}) {
    const int deg = inst.kind == AlgebraKind::Sequence ? 3 : 0;
    const MatSeq g = random_part_element(inst, rng, PartTag::BPlus, deg);
    const BlockOperator h = hankel_op(inst, g, SymbolRole::B, Sign::Plus, std::max(3, deg));
    Stacked ed = zero_stacked(h.domain);
    ed.comps[1] = unit_of(inst, SymbolRole::D);
    const Stacked out = apply(h, ed);
    CHECK(dist(out.comps[1], g) == 0.0);
    CHECK(out.comps[0].is_zero());
  }
}

TEST_CASE("a single high coefficient yields an antidiagonal finite-rank Hankel block") {
  const AlgebraInstance inst = AlgebraInstance::sequence(1, 1);
  MatSeq g(1, 1);
  g.set_coeff(2, CMat::Identity(1, 1));
  const Space dom = single_part_space(inst, PartTag::AMinus0, 3);  // coefficients -3..-1
  const Space cod = single_part_space(inst, PartTag::APlus, 3);    // coefficients 0..3
  const BlockOperator h = compression(inst, g, SymbolRole::A, dom, cod);
  int nonzero = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 3; ++c) {
      const int k = r, j = -3 + c;
      const bool hit = (k - j == 2);
      CHECK(h.matrix(r, c) == (hit ? Complex(1, 0) : Complex(0, 0)));
      nonzero += hit;
    }
  CHECK(nonzero == 2);
  CHECK(svd_analyze(h.matrix).sigma_min >= 0.0);
  Eigen::FullPivLU<CMat> lu(h.matrix);
  CHECK(lu.rank() == 2);
}

TEST_CASE("product rules for trivial and bundled symbol pairs") {
  for (const auto& inst : {kMat3, kSeq22}) {
    const auto rep = verify_product_rules(inst, unit_of(inst, SymbolRole::A), SymbolRole::A,
                                          unit_of(inst, SymbolRole::A), SymbolRole::A, 2);
    CHECK(rep.max_residual == 0.0);
  }
  const DataSet data = fixtures::triangular_p3();
  const auto rep = verify_product_rules(data.inst, adjoint(data.alpha), SymbolRole::A, data.beta,
                                        SymbolRole::B, 0);
  CHECK(rep.pass);
  CHECK(rep.max_residual < 1e-12);
}

TEST_CASE("product rules on random composable sequence pairs") {
  Rng rng(33);
  const AlgebraInstance inst = AlgebraInstance::sequence(2, 3);
  struct Pair {
    SymbolRole rho, phi;
  };
  for (const Pair pr : {Pair{SymbolRole::A, SymbolRole::B}, Pair{SymbolRole::B, SymbolRole::D},
                        Pair{SymbolRole::C, SymbolRole::A}, Pair{SymbolRole::D, SymbolRole::C}}) {
    const MatSeq rho = random_element(inst, rng, pr.rho, 3);
    const MatSeq phi = random_element(inst, rng, pr.phi, 3);
    const auto rep = verify_product_rules(inst, rho, pr.rho, phi, pr.phi, 3);
    CHECK(rep.max_residual < 1e-12);
  }
  CHECK_THROWS_AS(verify_product_rules(inst, random_element(inst, rng, SymbolRole::B, 1), SymbolRole::B,
                                       random_element(inst, rng, SymbolRole::B, 1), SymbolRole::B, 1),
                  Error);
}

TEST_CASE("trivial data produces identity and zero operator blocks") {
  for (const auto& inst : {kMat3, kSeq22}) {
    const DataSet data = DataSet::trivial(inst);
    const ROperators R = build_R(data, 2);
    CHECK(deviation_from_identity(R.R11) == 0.0);
    CHECK(deviation_from_identity(R.R22) == 0.0);
    CHECK(fro_norm(R.R12) == 0.0);
    CHECK(fro_norm(R.R21) == 0.0);
    const ROperators Ralt = build_R_alt(data, 2);
    CHECK(sub(R.full(), Ralt.full()).matrix.norm() == 0.0);
  }
}

TEST_CASE("unit identities of the R operators on the bundled data") {
  const DataSet data = fixtures::triangular_p3();
  const ROperators R = build_R(data, 0);

  Stacked eA = zero_stacked(R.R11.domain);
  eA.comps[0] = unit_of(data.inst, SymbolRole::A);
  Stacked eD = zero_stacked(R.R22.domain);
  eD.comps[1] = unit_of(data.inst, SymbolRole::D);

  const Stacked r11e = apply(R.R11, eA);
  CHECK(dist(r11e.comps[0], data.alpha) < 1e-12);
  CHECK(r11e.comps[1].norm() < 1e-15);
  const Stacked r12e = apply(R.R12, eD);
  CHECK(dist(r12e.comps[1], data.beta) < 1e-12);
  const Stacked r21e = apply(R.R21, eA);
  CHECK(dist(r21e.comps[0], data.gamma) < 1e-12);
  const Stacked r22e = apply(R.R22, eD);
  CHECK(dist(r22e.comps[1], data.delta) < 1e-12);
}

TEST_CASE("defining and alternative R formulas agree") {
  const DataSet p3 = fixtures::triangular_p3();
  CHECK(sub(build_R(p3, 0).full(), build_R_alt(p3, 0).full()).matrix.norm() < 1e-12);

  const GeneratedInstance gen = generate_random_instance(kSeq22, 3, 77);
  const int w = window_bound(gen.data);
  const ROperators R = build_R(gen.data, w);
  const ROperators Ralt = build_R_alt(gen.data, w);
  CHECK(sub(R.full(), Ralt.full()).matrix.norm() < 1e-10);

  // Hermitian structure in the orthonormal coefficient bases.
  CHECK((R.R11.matrix - R.R11.matrix.adjoint()).norm() < 1e-10);
  CHECK((R.R22.matrix - R.R22.matrix.adjoint()).norm() < 1e-10);
  CHECK((R.R21.matrix - R.R12.matrix.adjoint()).norm() < 1e-10);

  // Involution identity R diag(I,-I) R = diag(R11, -R22).
  const CMat full = R.full().matrix;
  const int n1 = R.R11.matrix.rows(), n2 = R.R22.matrix.rows();
  CMat jp = CMat::Identity(n1 + n2, n1 + n2);
  jp.bottomRightCorner(n2, n2) *= -1.0;
  CMat expect = CMat::Zero(n1 + n2, n1 + n2);
  expect.topLeftCorner(n1, n1) = R.R11.matrix;
  expect.bottomRightCorner(n2, n2) = -R.R22.matrix;
  CHECK((full * jp * full - expect).norm() < 1e-10);
}

TEST_CASE("the alternative formulas demand the compatibility conditions") {
  const DataSet data = fixtures::triangular_p3();
  MatSeq beta = data.beta;
  CMat b0 = beta.coeff(0);
  b0(0, 0) += 0.2;
  beta.set_coeff(0, b0);
  const DataSet broken = DataSet::make(data.inst, data.alpha, beta, data.gamma, data.delta);
  CHECK_THROWS_AS(build_R_alt(broken, 0), Error);
  CHECK_THROWS_AS(build_R(fixtures::singular_diagonal_p2(), 0), Error);  // singular a0
}

TEST_CASE("omega assembles identity diagonal blocks") {
  const AlgebraInstance inst = kSeq22;
  CHECK(deviation_from_identity(build_omega(inst, zero_of(inst, SymbolRole::B), 1)) == 0.0);

  Rng rng(34);
  const MatSeq g = random_part_element(inst, rng, PartTag::BPlus, 2);
  const BlockOperator omega = build_omega(inst, g, 2);
  const int n1 = make_space(inst, SpaceSign::XPlus, 2).dim();
  const int n2 = make_space(inst, SpaceSign::YMinus, 2).dim();
  CHECK((omega.matrix.topLeftCorner(n1, n1) - CMat::Identity(n1, n1)).norm() == 0.0);
  CHECK((omega.matrix.bottomRightCorner(n2, n2) - CMat::Identity(n2, n2)).norm() == 0.0);
}

TEST_CASE("window bound reflects the data support") {
  const GeneratedInstance gen = generate_random_instance(AlgebraInstance::sequence(1, 2), 3, 5);
  CHECK(window_bound(gen.data) == 3);
  CHECK(window_bound(DataSet::trivial(kSeq22)) == 0);
  CHECK(window_bound(DataSet::trivial(kMat3)) == 0);
  CHECK_THROWS_AS(build_R(gen.data, 1), Error);  // window below the support bound
}

TEST_CASE("solutions are stable under window enlargement") {
  const GeneratedInstance gen = generate_random_instance(AlgebraInstance::sequence(2, 1), 4, 6);
  const int w = window_bound(gen.data);
  auto solve_at = [&](int radius) {
    const ROperators R = build_R(gen.data, radius);
    Stacked bx = zero_stacked(R.R11.domain);
    bx.comps[1] = -gen.data.beta;
    return unvec(R.R11.domain, solve_dense(R.R11.matrix, vec(R.R11.domain, bx))).comps[1];
  };
  CHECK(dist(solve_at(w), solve_at(w + 5)) < 1e-12);
}

TEST_CASE("shift intertwining holds for consistent data and fails for broken data") {
  const DataSet trivial = DataSet::trivial(kSeq22);
  const IntertwineReport t = check_shift_intertwining(trivial, 1);
  CHECK(t.max_residual == 0.0);

  const GeneratedInstance gen = generate_random_instance(kSeq22, 3, 41);
  const IntertwineReport good = check_shift_intertwining(gen.data, window_bound(gen.data));
  CHECK(good.inverse_form_evaluated);
  CHECK(good.max_residual < 1e-10);

  MatSeq beta = gen.data.beta;
  CMat b0 = beta.coeff(0);
  b0(0, 0) += 0.05;
  beta.set_coeff(0, b0);
  const DataSet broken = DataSet::make(gen.data.inst, gen.data.alpha, beta, gen.data.gamma, gen.data.delta);
  const IntertwineReport bad = check_shift_intertwining(broken, window_bound(broken));
  CHECK(bad.max_residual > 1e-3);
}

TEST_CASE("shift operators intertwine the Hankel compressions") {
  const AlgebraInstance inst = AlgebraInstance::sequence(2, 3);
  Rng rng(42);
  const MatSeq rho = random_element(inst, rng, SymbolRole::B, 2);
  const int w = 4;

  MatSeq zp_inv(inst.p, inst.p), zq_inv(inst.q, inst.q), zp(inst.p, inst.p), zq(inst.q, inst.q);
  zp.set_coeff(1, CMat::Identity(inst.p, inst.p));
  zp_inv.set_coeff(-1, CMat::Identity(inst.p, inst.p));
  zq.set_coeff(1, CMat::Identity(inst.q, inst.q));
  zq_inv.set_coeff(-1, CMat::Identity(inst.q, inst.q));

  const Space ym_w = make_space(inst, SpaceSign::YMinus, w);
  const Space ym_w1 = make_space(inst, SpaceSign::YMinus, w + 1);
  const Space xp_w1 = make_space(inst, SpaceSign::XPlus, w + 1);

  // H+[rho] S- = S*+ H+[rho]
  const BlockOperator s_minus = compression(inst, zq_inv, SymbolRole::D, ym_w, ym_w1);
  const BlockOperator h_big = compression(inst, rho, SymbolRole::B, ym_w1, xp_w1);
  const BlockOperator h_small = compression(inst, rho, SymbolRole::B, ym_w, xp_w1);
  const BlockOperator s_star_plus = compression(inst, zp_inv, SymbolRole::A, xp_w1, xp_w1);
  CHECK(sub(compose(h_big, s_minus), compose(s_star_plus, h_small)).matrix.norm() < 1e-12);

  // H-[rho] S+ = S*- H-[rho] on the crossed pair of halves.
  const Space yp_w = make_space(inst, SpaceSign::YPlus, w);
  const Space yp_w1 = make_space(inst, SpaceSign::YPlus, w + 1);
  const Space xm_w1 = make_space(inst, SpaceSign::XMinus, w + 1);
  const BlockOperator s_plus = compression(inst, zq, SymbolRole::D, yp_w, yp_w1);
  const BlockOperator hm_big = compression(inst, rho, SymbolRole::B, yp_w1, xm_w1);
  const BlockOperator hm_small = compression(inst, rho, SymbolRole::B, yp_w, xm_w1);
  const BlockOperator s_star_minus = compression(inst, zp, SymbolRole::A, xm_w1, xm_w1);
  CHECK(sub(compose(hm_big, s_plus), compose(s_star_minus, hm_small)).matrix.norm() < 1e-12);

  // S*+ S+ is the identity embedding on X+.
  const Space xp_w = make_space(inst, SpaceSign::XPlus, w);
  const BlockOperator up = compression(inst, zp, SymbolRole::A, xp_w, xp_w1);
  const BlockOperator down = compression(inst, zp_inv, SymbolRole::A, xp_w1, xp_w1);
  CHECK(sub(compose(down, up), pad_codomain(identity_op(xp_w), xp_w1)).matrix.norm() == 0.0);
}

TEST_CASE("operator plumbing rejects mismatched bases") {
  const ROperators R = build_R(DataSet::trivial(kSeq22), 2);
  CHECK_NOTHROW(compose(R.R11, R.R12));          // X+ <- X+ <- Y-
  CHECK_THROWS_AS(compose(R.R11, R.R21), Error);  // R21 lands in Y-, not X+
  CHECK_THROWS_AS(compose(R.R12, R.R11), Error);
  CHECK_THROWS_AS(add(R.R11, R.R12), Error);
}

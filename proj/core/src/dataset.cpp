#include "eginv/dataset.hpp"

#include "eginv/block_operator.hpp"

namespace eginv {

DataSet DataSet::make(const AlgebraInstance& inst, MatSeq alpha, MatSeq beta, MatSeq gamma, MatSeq delta,
                      double membership_tol) {
  require_member(inst, alpha, PartTag::APlus, "alpha", membership_tol);
  require_member(inst, beta, PartTag::BPlus, "beta", membership_tol);
  require_member(inst, gamma, PartTag::CMinus, "gamma", membership_tol);
  require_member(inst, delta, PartTag::DMinus, "delta", membership_tol);
  return DataSet{inst, std::move(alpha), std::move(beta), std::move(gamma), std::move(delta)};
}

DataSet DataSet::trivial(const AlgebraInstance& inst) {
  return DataSet{inst, unit_of(inst, SymbolRole::A), zero_of(inst, SymbolRole::B),
                 zero_of(inst, SymbolRole::C), unit_of(inst, SymbolRole::D)};
}

int window_bound(const DataSet& data) {
  if (data.inst.kind == AlgebraKind::TriangularMatrix) return 0;
  return std::max(std::max(data.alpha.degree(), data.beta.degree()),
                  std::max(data.gamma.degree(), data.delta.degree()));
}

MatSeq a0_of(const DataSet& data) { return project(data.inst, data.alpha, PartTag::Ad); }
MatSeq d0_of(const DataSet& data) { return project(data.inst, data.delta, PartTag::Dd); }

DiagInfo invert_diagonal(const AlgebraInstance& inst, const MatSeq& x, double ratio) {
  DiagInfo out;
  const CMat m = x.coeff(0);
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "invert_diagonal: square required");
  if (inst.kind == AlgebraKind::TriangularMatrix) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
      const double a = std::abs(m(i, i));
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
    out.cond = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
    out.invertible = hi > 0 && lo > ratio * hi;
    if (out.invertible) {
      CMat inv = CMat::Zero(m.rows(), m.cols());
      for (int i = 0; i < m.rows(); ++i) inv(i, i) = 1.0 / m(i, i);
      out.inverse = MatSeq::constant(std::move(inv));
    }
    return out;
  }
  const SvdInfo s = svd_analyze(m);
  out.cond = s.cond;
  out.invertible = s.invertible(ratio);
  if (out.invertible) out.inverse = MatSeq::constant(invert_dense(m));
  return out;
}

ConditionResiduals condition_residuals(const DataSet& data, double invertibility_ratio) {
  const auto& I = data.inst;
  ConditionResiduals out;

  const BlockElement Q = BlockElement::make(I, data.alpha, data.beta, data.gamma, data.delta);
  const BlockElement e = BlockElement::unit(I);
  BlockElement J = e;
  J.d = -J.d;

  out.scale = std::max(1.0, Q.norm() * Q.norm());

  // Q* J Q - diag(a0, -d0): corners carry the (C1)-(C3) defects.
  const MatSeq a0 = a0_of(data);
  const MatSeq d0 = d0_of(data);
  BlockElement lhs = block_mul(block_mul(block_adjoint(Q), J), Q);
  out.r[0] = dist(lhs.a, a0);
  out.r[2] = lhs.b.norm();  // alpha* beta - gamma* delta
  out.r[1] = dist(lhs.d, -d0);

  const DiagInfo a0i = invert_diagonal(I, a0, invertibility_ratio);
  const DiagInfo d0i = invert_diagonal(I, d0, invertibility_ratio);
  if (!a0i.invertible || !d0i.invertible) return out;
  out.evaluable456 = true;

  // Q diag(a0^-1, -d0^-1) Q* - diag(e, -e): corners carry (C4)-(C6).
  BlockElement mid = BlockElement::zero(I);
  mid.a = a0i.inverse;
  mid.d = -d0i.inverse;
  BlockElement lhs2 = block_mul(block_mul(Q, mid), block_adjoint(Q));
  out.r[3] = dist(lhs2.a, unit_of(I, SymbolRole::A));
  out.r[5] = lhs2.b.norm();  // alpha a0^-1 gamma* - beta d0^-1 delta*
  out.r[4] = dist(lhs2.d, -unit_of(I, SymbolRole::D));
  return out;
}

std::array<double, 4> inclusion_residuals(const DataSet& data, const MatSeq& g) {
  const auto& I = data.inst;
  const MatSeq gs = adjoint(g);
  const MatSeq eA = unit_of(I, SymbolRole::A);
  const MatSeq eD = unit_of(I, SymbolRole::D);
  std::array<double, 4> r{};
  r[0] = membership_residual(I, data.alpha + mul(I, g, data.gamma) - eA, PartTag::AMinus0);
  r[1] = membership_residual(I, mul(I, gs, data.alpha) + data.gamma, PartTag::CPlus);
  r[2] = membership_residual(I, mul(I, g, data.delta) + data.beta, PartTag::BMinus);
  r[3] = membership_residual(I, data.delta + mul(I, gs, data.beta) - eD, PartTag::DPlus0);
  return r;
}

}  // namespace eginv

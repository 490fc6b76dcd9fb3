#include "eginv/r_operators.hpp"

namespace eginv {

namespace {

struct Builder {
  const DataSet& data;
  const AlgebraInstance& inst;
  int w;       // target window radius
  int wb;      // enlarged codomain radius for the two spill-prone chains
  MatSeq as, bs, cs, ds;  // adjoints of the data

  Builder(const DataSet& d, int radius) : data(d), inst(d.inst), w(radius) {
    const int n = window_bound(d);
    if (inst.kind == AlgebraKind::Sequence && w < n)
      fail(ErrorKind::WindowTooSmall, "build_R: window radius " + std::to_string(w) +
                                          " below data support bound " + std::to_string(n));
    wb = w + n;
    as = adjoint(d.alpha);
    bs = adjoint(d.beta);
    cs = adjoint(d.gamma);
    ds = adjoint(d.delta);
  }

  Space sp(SpaceSign s, int r) const { return make_space(inst, s, r); }

  BlockOperator comp(const MatSeq& sym, SymbolRole role, Sign dom_half, Sign cod_half, int rd, int rc) const {
    return compression(inst, sym, role, sp(domain_space_sign(role, dom_half), rd),
                       sp(codomain_space_sign(role, cod_half), rc));
  }

  // Difference of two chains whose individual terms spill past the target
  // window but whose difference does not once the compatibility conditions
  // hold; the outer rows are dropped, verified against spill_tol.
  BlockOperator verified_difference(const BlockOperator& t1, const BlockOperator& t2, SpaceSign cod,
                                    double spill_tol) const {
    return restrict_codomain(sub(t1, t2), sp(cod, w), spill_tol);
  }
};

}  // namespace

ROperators build_R(const DataSet& data, int radius, double invertibility_ratio, double spill_tol) {
  const Builder b(data, radius);
  const auto& I = data.inst;

  const DiagInfo a0 = invert_diagonal(I, a0_of(data), invertibility_ratio);
  const DiagInfo d0 = invert_diagonal(I, d0_of(data), invertibility_ratio);
  if (!a0.invertible)
    fail(ErrorKind::SingularDiagonal, "build_R: a0 = P_Ad(alpha) is singular (cond " + std::to_string(a0.cond) + ")");
  if (!d0.invertible)
    fail(ErrorKind::SingularDiagonal, "build_R: d0 = P_Dd(delta) is singular (cond " + std::to_string(d0.cond) + ")");

  using S = Sign;
  using R = SymbolRole;
  const int w = b.w, wb = b.wb;

  // R11: the outer T+[alpha], T+[beta] factors enlarge the codomain; the
  // difference is identity plus a finite-rank part inside the target window.
  const BlockOperator r11 = b.verified_difference(
      compose(b.comp(data.alpha, R::A, S::Plus, S::Plus, w, wb),
              compose(b.comp(a0.inverse, R::A, S::Plus, S::Plus, w, w), b.comp(b.as, R::A, S::Plus, S::Plus, w, w))),
      compose(b.comp(data.beta, R::B, S::Plus, S::Plus, w, wb),
              compose(b.comp(d0.inverse, R::D, S::Plus, S::Plus, w, w), b.comp(b.bs, R::C, S::Plus, S::Plus, w, w))),
      SpaceSign::XPlus, spill_tol);

  // R21: crossed compressions only; no spill at radius >= data bound.
  const BlockOperator r21 = sub(
      compose(b.comp(data.gamma, R::C, S::Plus, S::Minus, w, w),
              compose(b.comp(a0.inverse, R::A, S::Plus, S::Plus, w, w), b.comp(b.as, R::A, S::Plus, S::Plus, w, w))),
      compose(b.comp(data.delta, R::D, S::Plus, S::Minus, w, w),
              compose(b.comp(d0.inverse, R::D, S::Plus, S::Plus, w, w), b.comp(b.bs, R::C, S::Plus, S::Plus, w, w))));

  const BlockOperator r12 = sub(
      compose(b.comp(data.beta, R::B, S::Minus, S::Plus, w, w),
              compose(b.comp(d0.inverse, R::D, S::Minus, S::Minus, w, w), b.comp(b.ds, R::D, S::Minus, S::Minus, w, w))),
      compose(b.comp(data.alpha, R::A, S::Minus, S::Plus, w, w),
              compose(b.comp(a0.inverse, R::A, S::Minus, S::Minus, w, w), b.comp(b.cs, R::B, S::Minus, S::Minus, w, w))));

  const BlockOperator r22 = b.verified_difference(
      compose(b.comp(data.delta, R::D, S::Minus, S::Minus, w, wb),
              compose(b.comp(d0.inverse, R::D, S::Minus, S::Minus, w, w), b.comp(b.ds, R::D, S::Minus, S::Minus, w, w))),
      compose(b.comp(data.gamma, R::C, S::Minus, S::Minus, w, wb),
              compose(b.comp(a0.inverse, R::A, S::Minus, S::Minus, w, w), b.comp(b.cs, R::B, S::Minus, S::Minus, w, w))),
      SpaceSign::YMinus, spill_tol);

  return ROperators{r11, r12, r21, r22, a0.inverse, d0.inverse, a0.cond, d0.cond};
}

ROperators build_R_alt(const DataSet& data, int radius, double invertibility_ratio, double condition_tol) {
  const auto cond = condition_residuals(data, invertibility_ratio);
  if (!cond.evaluable456)
    fail(ErrorKind::SingularDiagonal, "build_R_alt: a0 or d0 singular, (C4)-(C6) not evaluable");
  for (int k = 3; k < 6; ++k)
    if (cond.r[k] > condition_tol * cond.scale)
      fail(ErrorKind::PreconditionFailed, "build_R_alt: condition C" + std::to_string(k + 1) +
                                              " residual " + std::to_string(cond.r[k]));

  const Builder b(data, radius);
  const auto& I = data.inst;
  const DiagInfo a0 = invert_diagonal(I, a0_of(data), invertibility_ratio);
  const DiagInfo d0 = invert_diagonal(I, d0_of(data), invertibility_ratio);
  const double spill_tol =
      std::max(1e-10, 100.0 * std::max(cond.r[3], std::max(cond.r[4], cond.r[5])));

  using S = Sign;
  using R = SymbolRole;
  const int w = b.w, wb = b.wb;

  // R11 = I - H+[alpha] a0^-1 H-[alpha*] + H+[beta] d0^-1 H-[beta*]
  const BlockOperator r11 = add(
      identity_op(b.sp(SpaceSign::XPlus, w)),
      sub(compose(b.comp(data.beta, R::B, S::Minus, S::Plus, w, w),
                  compose(b.comp(d0.inverse, R::D, S::Minus, S::Minus, w, w),
                          b.comp(b.bs, R::C, S::Plus, S::Minus, w, w))),
          compose(b.comp(data.alpha, R::A, S::Minus, S::Plus, w, w),
                  compose(b.comp(a0.inverse, R::A, S::Minus, S::Minus, w, w),
                          b.comp(b.as, R::A, S::Plus, S::Minus, w, w)))));

  // R21 = T-[delta] d0^-1 H-[beta*] - T-[gamma] a0^-1 H-[alpha*]
  const BlockOperator r21 = b.verified_difference(
      compose(b.comp(data.delta, R::D, S::Minus, S::Minus, w, wb),
              compose(b.comp(d0.inverse, R::D, S::Minus, S::Minus, w, w), b.comp(b.bs, R::C, S::Plus, S::Minus, w, w))),
      compose(b.comp(data.gamma, R::C, S::Minus, S::Minus, w, wb),
              compose(b.comp(a0.inverse, R::A, S::Minus, S::Minus, w, w), b.comp(b.as, R::A, S::Plus, S::Minus, w, w))),
      SpaceSign::YMinus, spill_tol);

  // R12 = T+[alpha] a0^-1 H+[gamma*] - T+[beta] d0^-1 H+[delta*]
  const BlockOperator r12 = b.verified_difference(
      compose(b.comp(data.alpha, R::A, S::Plus, S::Plus, w, wb),
              compose(b.comp(a0.inverse, R::A, S::Plus, S::Plus, w, w), b.comp(b.cs, R::B, S::Minus, S::Plus, w, w))),
      compose(b.comp(data.beta, R::B, S::Plus, S::Plus, w, wb),
              compose(b.comp(d0.inverse, R::D, S::Plus, S::Plus, w, w), b.comp(b.ds, R::D, S::Minus, S::Plus, w, w))),
      SpaceSign::XPlus, spill_tol);

  // R22 = I - H-[delta] d0^-1 H+[delta*] + H-[gamma] a0^-1 H+[gamma*]
  const BlockOperator r22 = add(
      identity_op(b.sp(SpaceSign::YMinus, w)),
      sub(compose(b.comp(data.gamma, R::C, S::Plus, S::Minus, w, w),
                  compose(b.comp(a0.inverse, R::A, S::Plus, S::Plus, w, w),
                          b.comp(b.cs, R::B, S::Minus, S::Plus, w, w))),
          compose(b.comp(data.delta, R::D, S::Plus, S::Minus, w, w),
                  compose(b.comp(d0.inverse, R::D, S::Plus, S::Plus, w, w),
                          b.comp(b.ds, R::D, S::Minus, S::Plus, w, w)))));

  return ROperators{r11, r12, r21, r22, a0.inverse, d0.inverse, a0.cond, d0.cond};
}

BlockOperator build_omega(const AlgebraInstance& inst, const MatSeq& g, int radius) {
  auto [br, bc] = role_shape(inst, SymbolRole::B);
  if (g.rows != br || g.cols != bc)
    fail(ErrorKind::DimensionMismatch, "build_omega: g must be " + std::to_string(br) + "x" + std::to_string(bc));
  require_member(inst, g, PartTag::BPlus, "g");
  if (inst.kind == AlgebraKind::Sequence && radius < g.degree())
    fail(ErrorKind::WindowTooSmall, "build_omega: radius below deg g");
  const Space xp = make_space(inst, SpaceSign::XPlus, radius);
  const Space ym = make_space(inst, SpaceSign::YMinus, radius);
  const BlockOperator hg = compression(inst, g, SymbolRole::B, ym, xp);
  const BlockOperator hgs = compression(inst, adjoint(g), SymbolRole::C, xp, ym);
  return assemble2x2(identity_op(xp), hg, hgs, identity_op(ym));
}

IntertwineReport check_shift_intertwining(const DataSet& data, int radius, double invertibility_ratio) {
  const auto& I = data.inst;
  if (I.kind != AlgebraKind::Sequence)
    fail(ErrorKind::PreconditionFailed, "check_shift_intertwining: sequence instance only");

  // Build one radius wider than compared so the support-growing shifts stay
  // strict; both sides are then compared on the common sub-window.
  const int rb = std::max(radius, window_bound(data)) + 1;
  const ROperators R = build_R(data, rb, invertibility_ratio, std::numeric_limits<double>::infinity());

  MatSeq zp(I.p, I.p), zp_inv(I.p, I.p), zq_inv(I.q, I.q), zq(I.q, I.q);
  zp.set_coeff(1, CMat::Identity(I.p, I.p));
  zp_inv.set_coeff(-1, CMat::Identity(I.p, I.p));
  zq.set_coeff(1, CMat::Identity(I.q, I.q));
  zq_inv.set_coeff(-1, CMat::Identity(I.q, I.q));

  const Space xp_b = make_space(I, SpaceSign::XPlus, rb);
  const Space ym_b = make_space(I, SpaceSign::YMinus, rb);
  const Space xp_s = make_space(I, SpaceSign::XPlus, rb - 1);
  const Space ym_s = make_space(I, SpaceSign::YMinus, rb - 1);

  // S*+ on X+, S- on Y- (domain one window smaller so the image fits), and
  // their counterparts.
  const BlockOperator vx_star = compression(I, zp_inv, SymbolRole::A, xp_b, xp_b);
  const BlockOperator vx = compression(I, zp, SymbolRole::A, xp_s, xp_b);
  const BlockOperator vy = compression(I, zq_inv, SymbolRole::D, ym_s, ym_b);
  const BlockOperator vy_star = compression(I, zq, SymbolRole::D, ym_b, ym_b);

  IntertwineReport rep;
  auto rel = [](const BlockOperator& lhs, const BlockOperator& rhs) {
    return sub(lhs, rhs).matrix.norm() / std::max(1.0, fro_norm(lhs));
  };

  // Compressions of R11 and R22 to the smaller window (domain first, so the
  // identity tail does not land in the dropped rows; no spill verification,
  // since flagging inconsistent data is the point of this check).
  const double inf = std::numeric_limits<double>::infinity();
  const BlockOperator r11_s = restrict_codomain(restrict_domain(R.R11, xp_s), xp_s, inf);
  const BlockOperator r22_s = restrict_codomain(restrict_domain(R.R22, ym_s), ym_s, inf);

  // R11 S*+ R12 = R12 S- R22
  rep.residuals[0] = rel(restrict_domain(compose(R.R11, compose(vx_star, R.R12)), ym_s),
                         compose(R.R12, compose(vy, r22_s)));

  // R22 S*- R21 = R21 S+ R11
  rep.residuals[1] = rel(restrict_domain(compose(R.R22, compose(vy_star, R.R21)), xp_s),
                         compose(R.R21, compose(vx, r11_s)));

  // S*+ (R12 R22^-1) = (R11^-1 R12) S- when the diagonal blocks invert.
  const SvdInfo s11 = svd_analyze(R.R11);
  const SvdInfo s22 = svd_analyze(R.R22);
  if (s11.invertible(invertibility_ratio) && s22.invertible(invertibility_ratio)) {
    rep.inverse_form_evaluated = true;
    const BlockOperator r12_r22inv{ym_b, xp_b, R.R12.matrix * invert_dense(R.R22.matrix)};
    const BlockOperator r11inv_r12{ym_b, xp_b, invert_dense(R.R11.matrix) * R.R12.matrix};
    rep.residuals[2] = rel(restrict_domain(compose(vx_star, r12_r22inv), ym_s),
                           compose(r11inv_r12, vy));
  }

  rep.max_residual = *std::max_element(rep.residuals.begin(), rep.residuals.end());
  return rep;
}

}  // namespace eginv

#include "eginv/solver.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace eginv {

CheckReport check_conditions(const DataSet& data, const Tolerances& tol) {
  CheckReport rep;
  rep.tol = tol;
  rep.res = condition_residuals(data, tol.invertibility);
  const DiagInfo a0 = invert_diagonal(data.inst, a0_of(data), tol.invertibility);
  const DiagInfo d0 = invert_diagonal(data.inst, d0_of(data), tol.invertibility);
  rep.a0_invertible = a0.invertible;
  rep.d0_invertible = d0.invertible;
  rep.a0_cond = a0.cond;
  rep.d0_cond = d0.cond;
  return rep;
}

namespace {

// Roots of a scalar polynomial via its companion matrix, after trimming
// negligible leading coefficients.
std::vector<Complex> poly_roots(std::vector<Complex> c) {
  double top = 0;
  for (const auto& v : c) top = std::max(top, std::abs(v));
  if (top == 0) return {};
  while (c.size() > 1 && std::abs(c.back()) <= 1e-14 * top) c.pop_back();
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  CMat comp = CMat::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<CMat> es(comp, false);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + d);
  return roots;
}

}  // namespace

bool invertible_one_sided(const AlgebraInstance& inst, const MatSeq& x, SymbolRole role, double ratio) {
  if (role != SymbolRole::A && role != SymbolRole::D)
    fail(ErrorKind::PreconditionFailed, "invertible_one_sided: corner must be A or D");
  if (inst.kind == AlgebraKind::TriangularMatrix) return mat::diagonal_invertible(x.coeff(0), ratio);

  // A one-sided Wiener inverse exists iff det x(z) has no zeros in the closed
  // unit disk (corner A; corner D is the mirror image in z^-1).
  const MatSeq det = seq_det(x);
  if (det.is_zero()) return false;
  const bool plus_side = role == SymbolRole::A;
  std::vector<Complex> coeffs;
  const int deg = plus_side ? det.hi() : -det.lo();
  if ((plus_side && det.lo() < 0) || (!plus_side && det.hi() > 0))
    fail(ErrorKind::PartMismatch, "invertible_one_sided: symbol is not one-sided");
  coeffs.resize(deg + 1, Complex(0, 0));
  for (const auto& [j, m] : det.coeffs) coeffs[plus_side ? j : -j] = m(0, 0);

  const double scale = std::max(1.0, std::pow(x.norm(), x.rows));
  if (std::abs(coeffs[0]) <= 1e-12 * scale) return false;  // zero at z = 0 (resp. infinity)
  for (const Complex& r : poly_roots(coeffs))
    if (std::abs(r) <= 1.0 + 1e-9) return false;
  return true;
}

namespace {

double flag_scale(const CheckReport& rep) { return rep.res.scale; }

bool condition_ok(const CheckReport& rep, int k) { return rep.pass(k); }

// Exact one-sided window solve of T+[alpha*] g = -gamma* on the B+ column.
MatSeq canonical_g1(const DataSet& data) {
  const auto& I = data.inst;
  const int w = window_bound(data);
  const Space bp = single_part_space(I, PartTag::BPlus, w);
  const BlockOperator t = compression(I, adjoint(data.alpha), SymbolRole::A, bp, bp);
  CVec rhs = CVec::Zero(bp.dim());
  vec_component(bp, 0, -adjoint(data.gamma), rhs);
  const CVec sol = solve_dense(t.matrix, rhs);
  return unvec(bp, sol).comps[0];
}

// Exact one-sided window solve of T-[delta*] h = -beta* on the C- column;
// g2 = h* recovers -P_{B+}(beta delta^-1).
MatSeq canonical_g2(const DataSet& data) {
  const auto& I = data.inst;
  const int w = window_bound(data);
  const Space cm = single_part_space(I, PartTag::CMinus, w);
  const BlockOperator t = compression(I, adjoint(data.delta), SymbolRole::D, cm, cm);
  CVec rhs = CVec::Zero(cm.dim());
  vec_component(cm, 0, -adjoint(data.beta), rhs);
  const CVec sol = solve_dense(t.matrix, rhs);
  return adjoint(unvec(cm, sol).comps[0]);
}

void fill_inclusions(SolveReport& rep, const DataSet& data, const Tolerances& tol) {
  rep.inclusion = inclusion_residuals(data, rep.g);
  const double bound = std::max(tol.equality_abs, tol.inclusion * flag_scale(rep.conditions));
  for (int k = 0; k < 4; ++k)
    if (rep.inclusion[k] > bound) {
      rep.status = SolveStatus::NoSolution;
      rep.detail = "inclusion " + std::to_string(k + 1) + " residual " + std::to_string(rep.inclusion[k]);
      return;
    }
  rep.status = SolveStatus::Solved;
}

}  // namespace

SolveReport solve_canonical(const DataSet& data, const Tolerances& tol) {
  SolveReport rep;
  rep.method = SolveMethod::Canonical;
  rep.conditions = check_conditions(data, tol);

  if (!invertible_one_sided(data.inst, data.alpha, SymbolRole::A, tol.invertibility) ||
      !invertible_one_sided(data.inst, data.delta, SymbolRole::D, tol.invertibility)) {
    rep.status = SolveStatus::Refused;
    rep.detail = "alpha or delta not invertible in its one-sided subalgebra; use the general method";
    return rep;
  }

  const MatSeq g1 = canonical_g1(data);
  const MatSeq g2 = canonical_g2(data);
  rep.g1_g2_mismatch = dist(g1, g2);
  const double scale = std::max(flag_scale(rep.conditions), std::max(g1.norm(), g2.norm()));
  if (rep.g1_g2_mismatch > std::max(tol.equality_abs, tol.equality_rel * scale)) {
    rep.status = SolveStatus::NoSolution;
    rep.detail = "one-sided solutions disagree (condition C3 fails): |g1 - g2| = " +
                 std::to_string(rep.g1_g2_mismatch);
    return rep;
  }
  rep.g = g1;
  fill_inclusions(rep, data, tol);
  return rep;
}

SolveReport solve_general(const DataSet& data, const Tolerances& tol) {
  SolveReport rep;
  rep.method = SolveMethod::General;
  rep.conditions = check_conditions(data, tol);

  if (!rep.conditions.a0_invertible || !rep.conditions.d0_invertible) {
    rep.status = SolveStatus::Refused;
    rep.detail = "diagonal part a0 or d0 is singular; the R-operator route does not apply "
                 "(recover_data / oracle_inverse remain available)";
    return rep;
  }
  for (int k = 0; k < 6; ++k)
    if (!condition_ok(rep.conditions, k)) {
      rep.status = SolveStatus::NoSolution;
      rep.detail = "condition C" + std::to_string(k + 1) + " fails with residual " +
                   std::to_string(rep.conditions.res.r[k]);
      return rep;
    }

  const int w = window_bound(data);
  const auto& cr = rep.conditions.res.r;
  const double spill_tol = std::max(1e-10, 100.0 * std::max(cr[3], std::max(cr[4], cr[5])));
  const ROperators R = build_R(data, w, tol.invertibility, spill_tol);
  const SvdInfo s11 = svd_analyze(R.R11);
  const SvdInfo s22 = svd_analyze(R.R22);
  rep.r11_cond = s11.cond;
  rep.r22_cond = s22.cond;
  if (!s11.invertible(tol.invertibility) || !s22.invertible(tol.invertibility)) {
    rep.status = SolveStatus::NoSolution;
    rep.detail = "R11 or R22 is not invertible on the window (cond " + std::to_string(s11.cond) + ", " +
                 std::to_string(s22.cond) + ")";
    return rep;
  }

  // g = -R11^-1 beta on the B+ column of X+, h = -R22^-1 gamma on C-.
  Stacked bx = zero_stacked(R.R11.domain);
  bx.comps[1] = -data.beta;
  const Stacked gx = unvec(R.R11.domain, solve_dense(R.R11.matrix, vec(R.R11.domain, bx)));
  Stacked cy = zero_stacked(R.R22.domain);
  cy.comps[0] = -data.gamma;
  const Stacked hy = unvec(R.R22.domain, solve_dense(R.R22.matrix, vec(R.R22.domain, cy)));
  const double spill = std::max(gx.comps[0].norm(), hy.comps[1].norm());
  if (spill > 1e-6 * std::max(1.0, flag_scale(rep.conditions)))
    fail(ErrorKind::Internal, "solve_general: solution escaped its column, norm " + std::to_string(spill));
  rep.g = gx.comps[1];
  const MatSeq h = hy.comps[0];

  const double scale = std::max(flag_scale(rep.conditions), rep.g.norm());
  const double sym_mismatch = dist(h, adjoint(rep.g));
  if (sym_mismatch > std::max(tol.equality_abs, tol.equality_rel * scale)) {
    rep.status = SolveStatus::NoSolution;
    rep.detail = "(R11^-1 beta)* and R22^-1 gamma disagree by " + std::to_string(sym_mismatch);
    return rep;
  }

  if (data.inst.kind == AlgebraKind::Sequence) {
    rep.intertwine = check_shift_intertwining(data, w, tol.invertibility);
    rep.intertwine_checked = true;
    if (rep.intertwine.max_residual > std::max(tol.equality_abs, tol.equality_rel * scale)) {
      rep.status = SolveStatus::NoSolution;
      rep.detail = "shift-intertwining certificate fails with residual " +
                   std::to_string(rep.intertwine.max_residual);
      return rep;
    }
  }

  fill_inclusions(rep, data, tol);
  return rep;
}

InversionReport invert_omega(const MatSeq& g, const DataSet& data, const Tolerances& tol) {
  const auto& I = data.inst;
  require_member(I, g, PartTag::BPlus, "g");

  const auto incl = inclusion_residuals(data, g);
  const double scale = std::max(1.0, condition_residuals(data, tol.invertibility).scale);
  for (int k = 0; k < 4; ++k)
    if (incl[k] > std::max(tol.equality_abs, tol.inclusion * scale))
      fail(ErrorKind::PreconditionFailed, "invert_omega: g does not solve the inverse problem (inclusion " +
                                              std::to_string(k + 1) + " residual " + std::to_string(incl[k]) + ")");

  const DiagInfo a0 = invert_diagonal(I, a0_of(data), tol.invertibility);
  const DiagInfo d0 = invert_diagonal(I, d0_of(data), tol.invertibility);
  if (!a0.invertible || !d0.invertible)
    fail(ErrorKind::PreconditionFailed,
         "invert_omega: item (a) not satisfied: a0 or d0 is singular (cond " + std::to_string(a0.cond) + ", " +
             std::to_string(d0.cond) + ")");
  const auto cond = condition_residuals(data, tol.invertibility);
  for (int k = 3; k < 6; ++k)
    if (cond.r[k] > std::max(tol.equality_abs, tol.condition * cond.scale))
      fail(ErrorKind::PreconditionFailed, "invert_omega: item (b) not satisfied: C" + std::to_string(k + 1) +
                                              " residual " + std::to_string(cond.r[k]));

  const int w = std::max(window_bound(data), g.degree());
  const double spill_tol = std::max(1e-10, 100.0 * std::max(cond.r[3], std::max(cond.r[4], cond.r[5])));
  InversionReport rep{build_R(data, w, tol.invertibility, spill_tol), 0, 0, {}, {}};
  const BlockOperator omega = build_omega(I, g, w);
  const BlockOperator R = rep.R.full();
  rep.omega_r_residual = deviation_from_identity(compose(omega, R));
  rep.r_omega_residual = deviation_from_identity(compose(R, omega));
  const double bound = 1e-10 * std::max(1.0, fro_norm(R)) * std::max(1.0, fro_norm(omega));
  if (rep.omega_r_residual > bound || rep.r_omega_residual > bound)
    fail(ErrorKind::Internal, "invert_omega: inverse identity violated, residuals " +
                                  std::to_string(rep.omega_r_residual) + " / " +
                                  std::to_string(rep.r_omega_residual));

  // Formula cross-checks: H+[g] = -R11^-1 R12 = -R12 R22^-1 and the adjoint
  // pair, plus the closed forms for g itself.
  const Space xp = make_space(I, SpaceSign::XPlus, w);
  const Space ym = make_space(I, SpaceSign::YMinus, w);
  const CMat hg = compression(I, g, SymbolRole::B, ym, xp).matrix;
  const CMat hgs = compression(I, adjoint(g), SymbolRole::C, xp, ym).matrix;
  const CMat r11_inv = invert_dense(rep.R.R11.matrix);
  const CMat r22_inv = invert_dense(rep.R.R22.matrix);
  rep.hankel_formulas[0] = (hg + r11_inv * rep.R.R12.matrix).norm();
  rep.hankel_formulas[1] = (hg + rep.R.R12.matrix * r22_inv).norm();
  rep.hankel_formulas[2] = (hgs + rep.R.R21.matrix * r11_inv).norm();
  rep.hankel_formulas[3] = (hgs + r22_inv * rep.R.R21.matrix).norm();

  Stacked bx = zero_stacked(xp);
  bx.comps[1] = data.beta;
  rep.g_formulas[0] = dist(g, unvec(xp, -(r11_inv * vec(xp, bx))).comps[1]);
  Stacked cy = zero_stacked(ym);
  cy.comps[0] = data.gamma;
  rep.g_formulas[1] = dist(adjoint(g), unvec(ym, -(r22_inv * vec(ym, cy))).comps[0]);
  return rep;
}

DataSet recover_data(const AlgebraInstance& inst, const MatSeq& g, double invertibility_ratio) {
  require_member(inst, g, PartTag::BPlus, "g");
  const int w = inst.kind == AlgebraKind::Sequence ? g.degree() : 0;
  const BlockOperator omega = build_omega(inst, g, w);
  const SvdInfo s = svd_analyze(omega);
  if (!s.invertible(invertibility_ratio))
    fail(ErrorKind::SingularOperator,
         "recover_data: Omega is singular on the window (cond " + std::to_string(s.cond) +
             "); no data set exists for this g");

  Eigen::PartialPivLU<CMat> lu(omega.matrix);
  const Space& xy = omega.domain;

  Stacked rhs1 = zero_stacked(xy);
  rhs1.comps[0] = unit_of(inst, SymbolRole::A);
  const Stacked sol1 = unvec(xy, lu.solve(vec(xy, rhs1)));
  Stacked rhs2 = zero_stacked(xy);
  rhs2.comps[3] = unit_of(inst, SymbolRole::D);
  const Stacked sol2 = unvec(xy, lu.solve(vec(xy, rhs2)));

  const double spill = std::max(std::max(sol1.comps[1].norm(), sol1.comps[3].norm()),
                                std::max(sol2.comps[0].norm(), sol2.comps[2].norm()));
  if (spill > 1e-6 * std::max(1.0, s.cond))
    fail(ErrorKind::Internal, "recover_data: solution escaped its column, norm " + std::to_string(spill));

  return DataSet::make(inst, sol1.comps[0], sol2.comps[1], sol1.comps[2], sol2.comps[3]);
}

OracleInverse oracle_inverse(const BlockOperator& op, double cond_max) {
  if (!(op.domain == op.codomain)) fail(ErrorKind::DimensionMismatch, "oracle_inverse: square operator required");
  const SvdInfo s = svd_analyze(op);
  if (!(s.cond < cond_max))
    fail(ErrorKind::SingularOperator, "oracle_inverse: numerically singular, sigma_min = " +
                                          std::to_string(s.sigma_min) + ", cond = " + std::to_string(s.cond));
  OracleInverse out{BlockOperator{op.codomain, op.domain, invert_dense(op.matrix)}, 0.0, s.cond};
  out.residual = (op.matrix * out.inverse.matrix - CMat::Identity(op.matrix.rows(), op.matrix.cols())).norm();
  return out;
}

GeneratedInstance generate_random_instance(const AlgebraInstance& inst, int degree, std::uint64_t seed) {
  if (degree < 0) fail(ErrorKind::PreconditionFailed, "generate_random_instance: degree must be >= 0");
  const int max_attempts = 100;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(mix_seed(seed, attempt));
    MatSeq g = zero_of(inst, SymbolRole::B);
    if (inst.kind == AlgebraKind::TriangularMatrix) {
      const double scale = 1.0 / (inst.p * (inst.p + 1) / 2);
      CMat m = CMat::Zero(inst.p, inst.p);
      for (int i = 0; i < inst.p; ++i)
        for (int j = i; j < inst.p; ++j) m(i, j) = scale * rng.cgaussian();
      g.set_coeff(0, std::move(m));
    } else {
      const double scale = 1.0 / ((degree + 1) * inst.p * inst.q);
      for (int j = 0; j <= degree; ++j) {
        CMat m(inst.p, inst.q);
        for (int r = 0; r < inst.p; ++r)
          for (int c = 0; c < inst.q; ++c) m(r, c) = scale * rng.cgaussian();
        g.set_coeff(j, std::move(m));
      }
    }
    const BlockOperator omega = build_omega(inst, g, inst.kind == AlgebraKind::Sequence ? degree : 0);
    if (svd_analyze(omega).cond <= 1e6)
      return GeneratedInstance{g, recover_data(inst, g), seed, attempt};
  }
  fail(ErrorKind::PreconditionFailed,
       "generate_random_instance: no well-conditioned instance after " + std::to_string(max_attempts) +
           " attempts (seed " + std::to_string(seed) + ", degree " + std::to_string(degree) + ")");
}

}  // namespace eginv

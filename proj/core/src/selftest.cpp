#include "eginv/selftest.hpp"

#include <chrono>
#include <sstream>

#include "eginv/fixtures.hpp"
#include "eginv/io.hpp"
#include "eginv/solver.hpp"

namespace eginv::selftest {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

struct Gate {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << "FAIL " << what;
    }
  }
  void note(const std::string& what) { detail << (detail.tellp() > 0 ? "; " : "") << what; }
};

DataSet load_fixture_data(const std::string& dir, const std::string& name, const std::string& embedded) {
  if (dir.empty()) return parse_dataset(embedded, "fixture:" + name);
  return read_dataset_file(dir + "/" + name + ".json");
}

MatSeq load_fixture_g(const std::string& dir, const std::string& name, const std::string& embedded) {
  if (dir.empty()) return parse_element(embedded, "fixture:" + name).value;
  return read_element_file(dir + "/" + name + ".json").value;
}

double stacked_dist(const Stacked& a, const Stacked& b) {
  double s = 0;
  for (size_t i = 0; i < a.comps.size(); ++i) {
    const double d = dist(a.comps[i], b.comps[i]);
    s += d * d;
  }
  return std::sqrt(s);
}

// Unit identities: R11 e_A = alpha, R12 e_D = beta,
// R21 e_A = gamma, R22 e_D = delta.
double units_residual(const ROperators& R, const DataSet& data) {
  const auto& I = data.inst;
  Stacked eA = zero_stacked(R.R11.domain);
  eA.comps[0] = unit_of(I, SymbolRole::A);
  Stacked eD = zero_stacked(R.R22.domain);
  eD.comps[1] = unit_of(I, SymbolRole::D);

  Stacked col_a = zero_stacked(R.R11.codomain);
  col_a.comps[0] = data.alpha;
  Stacked col_b = zero_stacked(R.R12.codomain);
  col_b.comps[1] = data.beta;
  Stacked col_c = zero_stacked(R.R21.codomain);
  col_c.comps[0] = data.gamma;
  Stacked col_d = zero_stacked(R.R22.codomain);
  col_d.comps[1] = data.delta;

  double r = 0;
  r = std::max(r, stacked_dist(apply(R.R11, eA), col_a));
  r = std::max(r, stacked_dist(apply(R.R12, eD), col_b));
  r = std::max(r, stacked_dist(apply(R.R21, eA), col_c));
  r = std::max(r, stacked_dist(apply(R.R22, eD), col_d));
  return r;
}

double block_diff(const ROperators& a, const ROperators& b) {
  double r = 0;
  r = std::max(r, sub(a.R11, b.R11).matrix.norm());
  r = std::max(r, sub(a.R12, b.R12).matrix.norm());
  r = std::max(r, sub(a.R21, b.R21).matrix.norm());
  r = std::max(r, sub(a.R22, b.R22).matrix.norm());
  return r;
}

// R J' R = diag(R11, -R22) with J' = diag(I, -I).
double involution_residual(const ROperators& R) {
  const CMat full = R.full().matrix;
  const int n1 = R.R11.codomain.dim();
  const int n2 = R.R22.codomain.dim();
  CMat jp = CMat::Identity(n1 + n2, n1 + n2);
  jp.bottomRightCorner(n2, n2) *= -1.0;
  CMat expect = CMat::Zero(n1 + n2, n1 + n2);
  expect.topLeftCorner(n1, n1) = R.R11.matrix;
  expect.bottomRightCorner(n2, n2) = -R.R22.matrix;
  return (full * jp * full - expect).norm();
}

MatSeq solve_g_via(const ROperators& R, const DataSet& data) {
  Stacked bx = zero_stacked(R.R11.domain);
  bx.comps[1] = -data.beta;
  return unvec(R.R11.domain, solve_dense(R.R11.matrix, vec(R.R11.domain, bx))).comps[1];
}

struct SweepStats {
  int count = 0;
  double ms_roundtrip = 0;  // generation + condition check + general solve
  double max_cond = 0;
  double max_recover_rel = 0;
  double max_omega_r = 0, max_r_omega = 0, max_oracle_rel = 0, max_formula = 0;
  double max_units = 0, max_alt = 0, max_involution = 0, max_product = 0;
  double max_intertwine = 0, max_window_stability = 0;
  int failures = 0;
  std::string first_failure;

  void failed(const std::string& what) {
    ++failures;
    if (first_failure.empty()) first_failure = what;
  }
};

void sweep_instance(SweepStats& st, const AlgebraInstance& inst, int degree, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const GeneratedInstance gen = generate_random_instance(inst, degree, seed);
  const CheckReport chk = check_conditions(gen.data);
  if (!chk.res.evaluable456) {
    st.failed("instance seed " + std::to_string(seed) + ": a0/d0 singular");
    return;
  }
  for (int k = 0; k < 6; ++k) st.max_cond = std::max(st.max_cond, chk.res.r[k]);

  const SolveReport rep = solve_general(gen.data);
  if (rep.status != SolveStatus::Solved) {
    st.failed("instance seed " + std::to_string(seed) + " not solved: " + rep.detail);
    return;
  }
  st.max_recover_rel =
      std::max(st.max_recover_rel, dist(rep.g, gen.g) / std::max(1.0, gen.g.norm()));
  st.ms_roundtrip += ms_since(t0);

  // Structured-inverse identities and formula consistency against the dense oracle.
  const int w = window_bound(gen.data);
  const InversionReport inv = invert_omega(gen.g, gen.data);
  st.max_omega_r = std::max(st.max_omega_r, inv.omega_r_residual);
  st.max_r_omega = std::max(st.max_r_omega, inv.r_omega_residual);
  for (double v : inv.hankel_formulas) st.max_formula = std::max(st.max_formula, v);
  for (double v : inv.g_formulas) st.max_formula = std::max(st.max_formula, v);

  const BlockOperator omega = build_omega(inst, gen.g, w);
  const OracleInverse oracle = oracle_inverse(omega);
  const CMat rfull = inv.R.full().matrix;
  st.max_oracle_rel =
      std::max(st.max_oracle_rel, (rfull - oracle.inverse.matrix).norm() / std::max(1.0, rfull.norm()));

  // Structural identities.
  st.max_units = std::max(st.max_units, units_residual(inv.R, gen.data));
  st.max_alt = std::max(st.max_alt, block_diff(inv.R, build_R_alt(gen.data, w)));
  st.max_involution = std::max(st.max_involution, involution_residual(inv.R));

  const auto pr1 = verify_product_rules(inst, adjoint(gen.data.alpha), SymbolRole::A, gen.data.beta,
                                        SymbolRole::B, w);
  const auto pr2 = verify_product_rules(inst, gen.data.gamma, SymbolRole::C, gen.data.alpha, SymbolRole::A, w);
  st.max_product = std::max(st.max_product, std::max(pr1.max_residual, pr2.max_residual));
  if (inst.kind == AlgebraKind::Sequence) {
    Rng rng(mix_seed(seed, 999));
    const MatSeq rho = random_element(inst, rng, SymbolRole::A, 2);
    const MatSeq phi = random_element(inst, rng, SymbolRole::B, 2);
    const auto pr3 = verify_product_rules(inst, rho, SymbolRole::A, phi, SymbolRole::B, 2);
    st.max_product = std::max(st.max_product, pr3.max_residual);

    if (!rep.intertwine_checked) {
      st.failed("instance seed " + std::to_string(seed) + ": certificate not evaluated");
      return;
    }
    st.max_intertwine = std::max(st.max_intertwine, rep.intertwine.max_residual);
    const MatSeq g5 = solve_g_via(build_R(gen.data, w + 5), gen.data);
    st.max_window_stability = std::max(st.max_window_stability, dist(rep.g, g5));
  }
  ++st.count;
}

SweepStats run_sweep(const CorpusConfig& cfg) {
  SweepStats st;
  for (int i = 0; i < cfg.matrix_count; ++i)
    sweep_instance(st, AlgebraInstance::triangular(2 + i % 5), 0, 1000 + i);
  for (int i = 0; i < cfg.sequence_count; ++i)
    sweep_instance(st, AlgebraInstance::sequence(1 + i % 3, 1 + (i / 3) % 3), 1 + i % 6, 5000 + i);
  return st;
}

CriterionResult reference_p3(const std::string& dir) {
  const auto t0 = Clock::now();
  Gate gate;
  const DataSet data = load_fixture_data(dir, "triangular_p3", fixtures::triangular_p3_text());

  CMat gexp(3, 3);
  gexp << 1, 2, 0, 0, 1, 2, 0, 0, 1;

  const auto solve_t0 = Clock::now();
  const SolveReport rc = solve_canonical(data);
  const SolveReport rg = solve_general(data);
  const CheckReport chk = check_conditions(data);
  const double solve_ms = ms_since(solve_t0);

  gate.require(rc.status == SolveStatus::Solved, "canonical method solved");
  gate.require(rg.status == SolveStatus::Solved, "general method solved");
  if (rc.status == SolveStatus::Solved) {
    const double e = (rc.g.coeff(0) - gexp).cwiseAbs().maxCoeff();
    gate.require(e < 1e-12, "canonical g entry error " + fmt(e) + " < 1e-12");
    gate.note("canonical err " + fmt(e));
  }
  if (rg.status == SolveStatus::Solved) {
    const double e = (rg.g.coeff(0) - gexp).cwiseAbs().maxCoeff();
    gate.require(e < 1e-12, "general g entry error " + fmt(e) + " < 1e-12");
    gate.note("general err " + fmt(e));
  }
  const double cmax = std::max(chk.res.r[0], std::max(chk.res.r[1], chk.res.r[2]));
  gate.require(cmax < 1e-12, "C1-C3 residual " + fmt(cmax) + " < 1e-12");
  gate.require(solve_ms < 50.0, "runtime " + fmt(solve_ms) + " ms < 50 ms");
  gate.note("runtime " + fmt(solve_ms) + " ms");
  return {"reference-p3-reproduction", gate.pass, gate.detail.str(), ms_since(t0)};
}

CriterionResult singular_diagonal(const std::string& dir) {
  const auto t0 = Clock::now();
  Gate gate;
  const AlgebraInstance inst = AlgebraInstance::triangular(2);
  const MatSeq g = load_fixture_g(dir, "singular_diagonal_p2_g", fixtures::singular_diagonal_p2_g_text());
  const DataSet expect = load_fixture_data(dir, "singular_diagonal_p2", fixtures::singular_diagonal_p2_text());

  const DataSet rec = recover_data(inst, g);
  double e = 0;
  e = std::max(e, (rec.alpha - expect.alpha).max_abs());
  e = std::max(e, (rec.beta - expect.beta).max_abs());
  e = std::max(e, (rec.gamma - expect.gamma).max_abs());
  e = std::max(e, (rec.delta - expect.delta).max_abs());
  gate.require(e < 1e-12, "recovered data entry error " + fmt(e) + " < 1e-12");

  // The 6x6 matrix of [[I, H+g],[H-g*, I]] on the upper/lower triangular
  // elementary bases.
  const Space up = single_part_space(inst, PartTag::APlus, 0);
  const Space low = single_part_space(inst, PartTag::CMinus, 0);
  const BlockOperator omega6 = assemble2x2(identity_op(up), compression(inst, g, SymbolRole::B, low, up),
                                           compression(inst, adjoint(g), SymbolRole::C, up, low),
                                           identity_op(low));
  CMat expect6(6, 6);
  expect6 << 1, 0, 0, 1, 1, 0,  //
      0, 1, 0, 0, 0, 1,         //
      0, 0, 1, 0, 0, 1,         //
      1, 0, 0, 1, 0, 0,         //
      1, 0, 0, 0, 1, 0,         //
      0, 1, 1, 0, 0, 1;
  const double e6 = (omega6.matrix - expect6).cwiseAbs().maxCoeff();
  gate.require(e6 < 1e-12, "6x6 operator matrix entry error " + fmt(e6) + " < 1e-12");

  const CheckReport chk = check_conditions(rec);
  gate.require(chk.c123_pass(), "C1-C3 hold on the recovered data");
  gate.require(!chk.a0_invertible, "a0 = diag(-1, 0) flagged singular");

  const SolveReport rep = solve_general(rec);
  gate.require(rep.status == SolveStatus::Refused, "structured route refuses on singular diagonal");
  bool threw_item_a = false;
  try {
    invert_omega(g, rec);
  } catch (const Error& err) {
    threw_item_a = err.kind() == ErrorKind::PreconditionFailed &&
                   std::string(err.what()).find("item (a)") != std::string::npos;
  }
  gate.require(threw_item_a, "structured inversion reports item (a) violation");

  const OracleInverse oracle = oracle_inverse(build_omega(inst, g, 0));
  gate.require(oracle.residual < 1e-12, "dense oracle inverse residual " + fmt(oracle.residual) + " < 1e-12");
  gate.note("oracle residual " + fmt(oracle.residual) + ", cond " + fmt(oracle.cond));
  return {"singular-diagonal-example", gate.pass, gate.detail.str(), ms_since(t0)};
}

CriterionResult negative_controls(const std::string& dir) {
  const auto t0 = Clock::now();
  Gate gate;

  // Perturbing beta of a valid data set must be detected loudly.
  const DataSet base = load_fixture_data(dir, "triangular_p3", fixtures::triangular_p3_text());
  MatSeq beta = base.beta;
  CMat b0 = beta.coeff(0);
  b0(0, 1) += 0.01;
  beta.set_coeff(0, b0);
  const DataSet perturbed = DataSet::make(base.inst, base.alpha, beta, base.gamma, base.delta);

  const CheckReport chk = check_conditions(perturbed);
  const double cmax = std::max(chk.res.r[0], std::max(chk.res.r[1], chk.res.r[2]));
  gate.require(cmax > 1e-3, "perturbed data C1-C3 residual " + fmt(cmax) + " > 1e-3");
  gate.require(!chk.c123_pass(), "perturbed data fails the condition check");

  const SolveReport rep = solve_canonical(perturbed);
  gate.require(rep.status == SolveStatus::NoSolution, "canonical method reports no solution");
  gate.require(rep.g1_g2_mismatch > 1e-3, "one-sided mismatch " + fmt(rep.g1_g2_mismatch) + " > 1e-3");

  // Same control on a sequence-instance data set.
  const GeneratedInstance gen = generate_random_instance(AlgebraInstance::sequence(2, 2), 3, 424242);
  MatSeq beta2 = gen.data.beta;
  CMat b2 = beta2.coeff(0);
  b2(0, 0) += 0.01;
  beta2.set_coeff(0, b2);
  const DataSet perturbed2 = DataSet::make(gen.data.inst, gen.data.alpha, beta2, gen.data.gamma, gen.data.delta);
  const CheckReport chk2 = check_conditions(perturbed2);
  const double cmax2 = std::max(chk2.res.r[0], std::max(chk2.res.r[1], chk2.res.r[2]));
  gate.require(cmax2 > 1e-3, "perturbed sequence data C1-C3 residual " + fmt(cmax2) + " > 1e-3");
  const SolveReport rep2 = solve_general(perturbed2);
  gate.require(rep2.status == SolveStatus::NoSolution, "general method rejects perturbed sequence data");

  gate.note("integral-operator variants on the line are out of scope and never claimed");
  return {"negative-controls", gate.pass, gate.detail.str(), ms_since(t0)};
}

}  // namespace

std::vector<CriterionResult> run_all(const CorpusConfig& cfg, const std::string& fixture_dir) {
  std::vector<CriterionResult> out;
  out.push_back(reference_p3(fixture_dir));
  out.push_back(singular_diagonal(fixture_dir));

  const auto sweep_t0 = Clock::now();
  const SweepStats st = run_sweep(cfg);
  const double sweep_ms = ms_since(sweep_t0);
  const std::string corpus = std::to_string(st.count) + " instances";

  {
    Gate gate;
    gate.require(st.failures == 0, "corpus failures: " + st.first_failure);
    gate.require(st.max_recover_rel < 1e-8, "max relative recovery error " + fmt(st.max_recover_rel) + " < 1e-8");
    gate.require(st.max_cond < 1e-9, "max condition residual " + fmt(st.max_cond) + " < 1e-9");
    gate.require(st.ms_roundtrip < 30000.0, "round-trip time " + fmt(st.ms_roundtrip) + " ms < 30 s");
    gate.note(corpus + ", round-trip " + fmt(st.ms_roundtrip) + " ms");
    out.push_back({"roundtrip-corpus", gate.pass, gate.detail.str(), st.ms_roundtrip});
  }
  {
    Gate gate;
    gate.require(st.failures == 0, "corpus failures: " + st.first_failure);
    gate.require(st.max_omega_r < 1e-9, "max |Omega R - I| " + fmt(st.max_omega_r) + " < 1e-9");
    gate.require(st.max_r_omega < 1e-9, "max |R Omega - I| " + fmt(st.max_r_omega) + " < 1e-9");
    gate.require(st.max_oracle_rel < 1e-9, "max relative gap to dense inverse " + fmt(st.max_oracle_rel) + " < 1e-9");
    gate.require(st.max_formula < 1e-9, "max inverse-formula residual " + fmt(st.max_formula) + " < 1e-9");
    out.push_back({"inversion-equivalence", gate.pass, gate.detail.str(), sweep_ms});
  }
  {
    Gate gate;
    gate.require(st.failures == 0, "corpus failures: " + st.first_failure);
    gate.require(st.max_units < 1e-12, "max unit-identity residual " + fmt(st.max_units) + " < 1e-12");
    gate.require(st.max_alt < 1e-10, "max defining-vs-alternative gap " + fmt(st.max_alt) + " < 1e-10");
    gate.require(st.max_involution < 1e-10, "max R J R involution residual " + fmt(st.max_involution) + " < 1e-10");
    gate.require(st.max_product < 1e-12, "max product-rule residual " + fmt(st.max_product) + " < 1e-12");
    out.push_back({"structural-identities", gate.pass, gate.detail.str(), sweep_ms});
  }
  {
    Gate gate;
    gate.require(st.failures == 0, "corpus failures: " + st.first_failure);
    gate.require(st.max_intertwine < 1e-10, "max intertwining residual " + fmt(st.max_intertwine) + " < 1e-10");
    gate.require(st.max_window_stability < 1e-12,
                 "max window-stability gap " + fmt(st.max_window_stability) + " < 1e-12");
    out.push_back({"shift-intertwining-and-window-stability", gate.pass, gate.detail.str(), sweep_ms});
  }

  out.push_back(negative_controls(fixture_dir));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace eginv::selftest

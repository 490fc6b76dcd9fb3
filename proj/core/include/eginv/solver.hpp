#pragma once

#include <cstdint>

#include "eginv/r_operators.hpp"

namespace eginv {

struct CheckReport {
  ConditionResiduals res;
  bool a0_invertible = false;
  bool d0_invertible = false;
  double a0_cond = std::numeric_limits<double>::infinity();
  double d0_cond = std::numeric_limits<double>::infinity();
  Tolerances tol;

  bool pass(int k) const {  // k in 0..5 for C1..C6
    if (k >= 3 && !res.evaluable456) return false;
    return res.r[k] <= std::max(tol.equality_abs, tol.condition * res.scale);
  }
  bool c123_pass() const { return pass(0) && pass(1) && pass(2); }
  bool all_pass() const { return c123_pass() && pass(3) && pass(4) && pass(5); }
};

CheckReport check_conditions(const DataSet& data, const Tolerances& tol = {});

enum class SolveStatus { Solved, NoSolution, Refused };
enum class SolveMethod { Canonical, General, OracleOnly };

struct SolveReport {
  SolveStatus status = SolveStatus::Refused;
  SolveMethod method = SolveMethod::General;
  MatSeq g;
  std::array<double, 4> inclusion{};  // defects of the four solution inclusions
  double g1_g2_mismatch = 0.0;        // canonical method
  double r11_cond = 0.0;
  double r22_cond = 0.0;
  IntertwineReport intertwine;        // sequence instance, general method
  bool intertwine_checked = false;
  CheckReport conditions;
  std::string detail;
};

// Closed-form route (alpha invertible inside A+, delta inside D-):
// g1 = -P_{B+}(alpha^{-*} gamma*) and g2 = -P_{B+}(beta delta^{-1}), computed
// as exact one-sided window solves; agreement of g1 and g2 certifies (C3).
SolveReport solve_canonical(const DataSet& data, const Tolerances& tol = {});

// Operator route: builds the R operators on the exact window, requires
// (C1)-(C6) and invertibility of R11 and R22, computes g = -R11^-1 beta and
// cross-checks (R11^-1 beta)* = R22^-1 gamma, the shift-intertwining
// certificate (sequence instance), and finally the four inclusions directly.
SolveReport solve_general(const DataSet& data, const Tolerances& tol = {});

// Invertibility inside the one-sided subalgebra: diagonal entries for the
// matrix instance; no determinant zeros in the relevant closed disk for the
// sequence instance.
bool invertible_one_sided(const AlgebraInstance& inst, const MatSeq& x, SymbolRole role, double ratio = 1e-8);

struct InversionReport {
  ROperators R;
  double omega_r_residual = 0.0;            // ||Omega R - I||_F
  double r_omega_residual = 0.0;            // ||R Omega - I||_F
  std::array<double, 4> hankel_formulas{};  // H+[g] vs -R11^-1 R12, -R12 R22^-1; H-[g*] likewise
  std::array<double, 2> g_formulas{};       // ||g + R11^-1 beta||, ||g* + R22^-1 gamma||
};

// Structured inverse of Omega(g): verifies g solves the problem and that the
// diagonal parts and (C4)-(C6) admit the R-formula, then asserts the inverse
// identities. Precondition failures carry the first violated item.
InversionReport invert_omega(const MatSeq& g, const DataSet& data, const Tolerances& tol = {});

// Solves Omega [alpha; gamma] = [e_A; 0] and Omega [beta; delta] = [0; e_D]
// densely; the ground-truth generator/oracle for every structured formula.
DataSet recover_data(const AlgebraInstance& inst, const MatSeq& g, double invertibility_ratio = 1e-10);

struct OracleInverse {
  BlockOperator inverse;
  double residual = 0.0;  // ||op inverse - I||_F
  double cond = 0.0;
};
OracleInverse oracle_inverse(const BlockOperator& op, double cond_max = 1e10);

struct GeneratedInstance {
  MatSeq g;
  DataSet data;
  std::uint64_t seed = 0;
  int attempts = 0;
};

// Seed-deterministic random instance: samples g in B+ with complex-Gaussian
// entries scaled by 1/(support size), retrying on fresh seed streams while
// cond(Omega) > 1e6, then recovers the matching data set.
GeneratedInstance generate_random_instance(const AlgebraInstance& inst, int degree, std::uint64_t seed);

}  // namespace eginv

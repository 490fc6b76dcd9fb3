#pragma once

#include <array>

#include "eginv/algebra.hpp"

namespace eginv {

// Problem data {alpha in A+, beta in B+, gamma in C-, delta in D-} over one
// instance. Construction validates part membership exactly.
struct DataSet {
  AlgebraInstance inst;
  MatSeq alpha, beta, gamma, delta;

  static DataSet make(const AlgebraInstance& inst, MatSeq alpha, MatSeq beta, MatSeq gamma, MatSeq delta,
                      double membership_tol = 0.0);
  static DataSet trivial(const AlgebraInstance& inst);  // alpha = e, beta = 0, gamma = 0, delta = e
};

// Max support degree over the data; 0 for the matrix instance. Window radius
// at which every finite-rank correction of the structured operators provably
// vanishes, so window solves are exact.
int window_bound(const DataSet& data);

MatSeq a0_of(const DataSet& data);  // P_{Ad} alpha
MatSeq d0_of(const DataSet& data);  // P_{Dd} delta

// Inverse of a diagonal-part element (entrywise for the matrix instance, a
// dense constant-coefficient inverse for the sequence instance).
struct DiagInfo {
  MatSeq inverse;
  double cond = std::numeric_limits<double>::infinity();
  bool invertible = false;
};
DiagInfo invert_diagonal(const AlgebraInstance& inst, const MatSeq& x, double ratio);

// Residuals of the six compatibility conditions, computed from the block
// identities Q* diag(e,-e) Q = diag(a0,-d0) and Q diag(a0^-1,-d0^-1) Q* =
// diag(e,-e) with Q = [[alpha, beta],[gamma, delta]]. When a0 or d0 is
// singular the second triple is not evaluable.
struct ConditionResiduals {
  std::array<double, 6> r{};  // C1..C6
  bool evaluable456 = false;
  double scale = 1.0;  // max(1, ||Q||^2), the natural size of the defects
};
ConditionResiduals condition_residuals(const DataSet& data, double invertibility_ratio = 1e-8);

// Membership defects of the four solution inclusions for a candidate g:
//   P_{A+}(alpha + g gamma - e_A), P_{C-}(g* alpha + gamma),
//   P_{B+}(g delta + beta),        P_{D-}(delta + g* beta - e_D).
std::array<double, 4> inclusion_residuals(const DataSet& data, const MatSeq& g);

}  // namespace eginv

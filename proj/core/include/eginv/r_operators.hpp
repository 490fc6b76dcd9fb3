#pragma once

#include "eginv/compressions.hpp"
#include "eginv/dataset.hpp"

namespace eginv {

// The four structured operators associated with a data set,
//   R11 = T+[alpha] a0^-1 T+[alpha*] - T+[beta]  d0^-1 T+[beta*]  : X+ -> X+
//   R21 = H-[gamma] a0^-1 T+[alpha*] - H-[delta] d0^-1 T+[beta*]  : X+ -> Y-
//   R12 = H+[beta]  d0^-1 T-[delta*] - H+[alpha] a0^-1 T-[gamma*] : Y- -> X+
//   R22 = T-[delta] d0^-1 T-[delta*] - T-[gamma] a0^-1 T-[gamma*] : Y- -> Y-
// on exact coefficient windows. For finitely supported data every non-identity
// contribution is supported strictly inside the window, so the dense blocks
// are compressions with an identity tail, not discretizations: intermediate
// codomains are enlarged by the data degree and the provably-zero outer rows
// are dropped with verification.
struct ROperators {
  BlockOperator R11, R12, R21, R22;
  MatSeq a0_inv, d0_inv;
  double a0_cond = 0, d0_cond = 0;

  BlockOperator full() const { return assemble2x2(R11, R12, R21, R22); }
};

// spill_tol bounds the verified-zero mass allowed on the dropped outer rows
// (relative to the operator norm). The cancellation that empties those rows
// is a consequence of (C4)-(C6), so diagnostic callers working on possibly
// inconsistent data pass infinity and obtain plain truncations instead.
ROperators build_R(const DataSet& data, int radius, double invertibility_ratio = 1e-8,
                   double spill_tol = 1e-10);

// Alternative finite-rank forms (identity plus Hankel products); requires
// (C4)-(C6) to hold within tolerance.
ROperators build_R_alt(const DataSet& data, int radius, double invertibility_ratio = 1e-8,
                       double condition_tol = 1e-9);

// Omega = [[I, H+[g]], [H-[g*], I]] on X+ (+) Y-. Requires radius >= deg g.
BlockOperator build_omega(const AlgebraInstance& inst, const MatSeq& g, int radius);

// Shift-intertwining certificate for the sequence instance: residuals of
//   R11 S*+ R12 - R12 S- R22,   R22 S*- R21 - R21 S+ R11,
// and, when R11 and R22 are invertible,
//   S*+ (R12 R22^-1) - (R11^-1 R12) S-,
// certifying that R11^-1 R12 intertwines like a Hankel operator.
struct IntertwineReport {
  std::array<double, 3> residuals{};
  bool inverse_form_evaluated = false;
  double max_residual = 0.0;
};

IntertwineReport check_shift_intertwining(const DataSet& data, int radius,
                                          double invertibility_ratio = 1e-8);

}  // namespace eginv

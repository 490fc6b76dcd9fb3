#pragma once

#include <optional>

#include "eginv/block_operator.hpp"

namespace eginv {

// Compressions of multiplication operators. A symbol rho in corner
//   A maps X -> X,   B maps Y -> X,   C maps X -> Y,   D maps Y -> Y,
// and the Toeplitz-like / Hankel-like pieces are P_half . L_rho restricted to
// one signed half of the domain:
//   T+ : plus -> plus,  T- : minus -> minus,
//   H+ : minus -> plus, H- : plus -> minus.
enum class Sign { Plus, Minus };

SpaceSign domain_space_sign(SymbolRole role, Sign half);    // half of X or Y per role
SpaceSign codomain_space_sign(SymbolRole role, Sign half);

// Dense matrix of x |-> P_codomain(rho x) on the given windowed bases. The
// codomain must be able to hold the exact image of the windowed domain; this
// is decided by support arithmetic and violations are reported with the
// required window, so a returned operator is never silently truncated.
BlockOperator compression(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role,
                          const Space& domain, const Space& codomain);

// Standard-space wrappers. `radius` bounds the coefficient windows; the
// codomain radius may exceed the domain radius when the symbol enlarges
// support (the caller can subsequently restrict verified-zero rows away).
BlockOperator toeplitz_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                          int radius);
BlockOperator toeplitz_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                          int dom_radius, int codom_radius);
BlockOperator hankel_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                        int radius);
BlockOperator hankel_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                        int dom_radius, int codom_radius);

// Corner of the product (rho applied after phi); nullopt when the corners do
// not compose.
std::optional<SymbolRole> compose_roles(SymbolRole rho, SymbolRole phi);

// Checks the four product identities relating T/H of a product symbol to the
// compressions of its factors, as dense matrices on exact enlarged windows:
//   T+[rho phi] = T+[rho] T+[phi] + H+[rho] H-[phi]
//   H+[rho phi] = T+[rho] H+[phi] + H+[rho] T-[phi]
//   H-[rho phi] = H-[rho] T+[phi] + T-[rho] H-[phi]
//   T-[rho phi] = H-[rho] H+[phi] + T-[rho] T-[phi]
struct ProductRuleReport {
  std::array<double, 4> residuals{};
  double max_residual = 0.0;
  bool pass = false;
};

ProductRuleReport verify_product_rules(const AlgebraInstance& inst, const MatSeq& rho, SymbolRole rho_role,
                                       const MatSeq& phi, SymbolRole phi_role, int radius = 4,
                                       double tol = 1e-12);

}  // namespace eginv

#include "eginv/compressions.hpp"

namespace eginv {

namespace {

bool acts_on_x(SymbolRole role) { return role == SymbolRole::A || role == SymbolRole::C; }
bool lands_in_x(SymbolRole role) { return role == SymbolRole::A || role == SymbolRole::B; }

SpaceSign half_of(bool x_side, Sign half) {
  if (x_side) return half == Sign::Plus ? SpaceSign::XPlus : SpaceSign::XMinus;
  return half == Sign::Plus ? SpaceSign::YPlus : SpaceSign::YMinus;
}

}  // namespace

SpaceSign domain_space_sign(SymbolRole role, Sign half) { return half_of(acts_on_x(role), half); }
SpaceSign codomain_space_sign(SymbolRole role, Sign half) { return half_of(lands_in_x(role), half); }

BlockOperator compression(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role,
                          const Space& domain, const Space& codomain) {
  auto [sr, sc] = role_shape(inst, role);
  if (symbol.rows != sr || symbol.cols != sc)
    fail(ErrorKind::DimensionMismatch, "compression: symbol is " + std::to_string(symbol.rows) + "x" +
                                           std::to_string(symbol.cols) + ", corner " + role_name(role) +
                                           " is " + std::to_string(sr) + "x" + std::to_string(sc));
  if (domain.comps.size() != codomain.comps.size())
    fail(ErrorKind::DimensionMismatch, "compression: component count mismatch " + domain.describe() + " -> " +
                                           codomain.describe());

  // Column-wise action: multiplication by the symbol maps domain component i
  // into the ambient corner of codomain component i.
  for (size_t ci = 0; ci < domain.comps.size(); ++ci) {
    const auto& dc = domain.comps[ci];
    const auto& cc = codomain.comps[ci];
    if (dc.rows != symbol.cols || cc.rows != symbol.rows || dc.cols != cc.cols)
      fail(ErrorKind::DimensionMismatch,
           "compression: component " + std::to_string(ci) + " shapes do not chain: " + domain.describe() +
               " -> " + codomain.describe());
    if (inst.kind == AlgebraKind::Sequence && !symbol.is_zero() && !dc.window.empty()) {
      const Window required = clip_to_part(
          inst, cc.part, Window{dc.window.lo + symbol.lo(), dc.window.hi + symbol.hi()});
      if (!cc.window.contains(required))
        fail(ErrorKind::WindowTooSmall,
             "compression: image of " + part_name(dc.part) + " needs window [" + std::to_string(required.lo) +
                 "," + std::to_string(required.hi) + "] in " + part_name(cc.part) + ", have [" +
                 std::to_string(cc.window.lo) + "," + std::to_string(cc.window.hi) + "]");
    }
  }

  BlockOperator op{domain, codomain, CMat::Zero(codomain.dim(), domain.dim())};
  CVec column = CVec::Zero(codomain.dim());
  int col = 0;
  for (int ci = 0; ci < static_cast<int>(domain.comps.size()); ++ci) {
    const int d = component_dim(domain, ci);
    for (int local = 0; local < d; ++local, ++col) {
      const MatSeq u = basis_at(domain, ci, local);
      const MatSeq w = project(inst, mul(inst, symbol, u), codomain.comps[ci].part);
      column.setZero();
      vec_component(codomain, ci, w, column);
      op.matrix.col(col) = column;
    }
  }
  return op;
}

BlockOperator toeplitz_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                          int radius) {
  return toeplitz_op(inst, symbol, role, sign, radius, radius);
}

BlockOperator toeplitz_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                          int dom_radius, int codom_radius) {
  return compression(inst, symbol, role, make_space(inst, domain_space_sign(role, sign), dom_radius),
                     make_space(inst, codomain_space_sign(role, sign), codom_radius));
}

BlockOperator hankel_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                        int radius) {
  return hankel_op(inst, symbol, role, sign, radius, radius);
}

BlockOperator hankel_op(const AlgebraInstance& inst, const MatSeq& symbol, SymbolRole role, Sign sign,
                        int dom_radius, int codom_radius) {
  const Sign crossed = sign == Sign::Plus ? Sign::Minus : Sign::Plus;
  return compression(inst, symbol, role, make_space(inst, domain_space_sign(role, crossed), dom_radius),
                     make_space(inst, codomain_space_sign(role, sign), codom_radius));
}

std::optional<SymbolRole> compose_roles(SymbolRole rho, SymbolRole phi) {
  using R = SymbolRole;
  switch (rho) {
    case R::A: return phi == R::A ? std::optional(R::A) : phi == R::B ? std::optional(R::B) : std::nullopt;
    case R::B: return phi == R::C ? std::optional(R::A) : phi == R::D ? std::optional(R::B) : std::nullopt;
    case R::C: return phi == R::A ? std::optional(R::C) : phi == R::B ? std::optional(R::D) : std::nullopt;
    case R::D: return phi == R::C ? std::optional(R::C) : phi == R::D ? std::optional(R::D) : std::nullopt;
  }
  return std::nullopt;
}

ProductRuleReport verify_product_rules(const AlgebraInstance& inst, const MatSeq& rho, SymbolRole rho_role,
                                       const MatSeq& phi, SymbolRole phi_role, int radius, double tol) {
  const auto prod_role = compose_roles(rho_role, phi_role);
  if (!prod_role)
    fail(ErrorKind::NonComposable,
         "verify_product_rules: corners " + role_name(rho_role) + " * " + role_name(phi_role) + " do not compose");
  const MatSeq prod = mul(inst, rho, phi);

  // Exactness: intermediate and final windows grow with the factor supports so
  // no composition truncates. Matched signs on the common middle space.
  const int r_u = radius;
  const int r_v = radius + (inst.kind == AlgebraKind::Sequence ? phi.degree() : 0);
  const int r_z = r_v + (inst.kind == AlgebraKind::Sequence ? rho.degree() : 0);

  auto dom = [&](SymbolRole role, Sign half, int r) { return make_space(inst, domain_space_sign(role, half), r); };
  auto cod = [&](SymbolRole role, Sign half, int r) { return make_space(inst, codomain_space_sign(role, half), r); };

  auto phi_c = [&](Sign from, Sign to) {
    return compression(inst, phi, phi_role, dom(phi_role, from, r_u), cod(phi_role, to, r_v));
  };
  auto rho_c = [&](Sign from, Sign to) {
    return compression(inst, rho, rho_role, dom(rho_role, from, r_v), cod(rho_role, to, r_z));
  };
  auto prod_c = [&](Sign from, Sign to) {
    return compression(inst, prod, *prod_role, dom(*prod_role, from, r_u), cod(*prod_role, to, r_z));
  };

  using S = Sign;
  ProductRuleReport rep;
  auto check = [&](int k, const BlockOperator& lhs, const BlockOperator& t1a, const BlockOperator& t1b,
                   const BlockOperator& t2a, const BlockOperator& t2b) {
    const BlockOperator rhs = add(compose(t1a, t1b), compose(t2a, t2b));
    rep.residuals[k] = sub(lhs, rhs).matrix.norm();
  };
  check(0, prod_c(S::Plus, S::Plus), rho_c(S::Plus, S::Plus), phi_c(S::Plus, S::Plus),
        rho_c(S::Minus, S::Plus), phi_c(S::Plus, S::Minus));
  check(1, prod_c(S::Minus, S::Plus), rho_c(S::Plus, S::Plus), phi_c(S::Minus, S::Plus),
        rho_c(S::Minus, S::Plus), phi_c(S::Minus, S::Minus));
  check(2, prod_c(S::Plus, S::Minus), rho_c(S::Plus, S::Minus), phi_c(S::Plus, S::Plus),
        rho_c(S::Minus, S::Minus), phi_c(S::Plus, S::Minus));
  check(3, prod_c(S::Minus, S::Minus), rho_c(S::Plus, S::Minus), phi_c(S::Minus, S::Plus),
        rho_c(S::Minus, S::Minus), phi_c(S::Minus, S::Minus));

  rep.max_residual = *std::max_element(rep.residuals.begin(), rep.residuals.end());
  rep.pass = rep.max_residual <= tol;
  return rep;
}

}  // namespace eginv

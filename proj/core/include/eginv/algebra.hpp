#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eginv/matrix_parts.hpp"
#include "eginv/matseq.hpp"
#include "eginv/parts.hpp"
#include "eginv/rng.hpp"

namespace eginv {

// Instance-dispatched algebra layer. Elements of both instantiations are
// carried as MatSeq values: finite-matrix elements are sequences supported at
// index 0, so the instance products and involution coincide with exact
// coefficient arithmetic; only part projections differ between the two kinds.

MatSeq project(const AlgebraInstance& inst, const MatSeq& x, PartTag part);
MatSeq mul(const AlgebraInstance& inst, const MatSeq& x, const MatSeq& y);
MatSeq adjoint_in(const AlgebraInstance& inst, const MatSeq& x);

MatSeq unit_of(const AlgebraInstance& inst, SymbolRole role);  // e_A / e_D only
MatSeq zero_of(const AlgebraInstance& inst, SymbolRole role);

// Frobenius norm of the component of x outside the part (0 iff member).
double membership_residual(const AlgebraInstance& inst, const MatSeq& x, PartTag part);
void require_member(const AlgebraInstance& inst, const MatSeq& x, PartTag part, const std::string& name,
                    double tol = 0.0);

MatSeq random_element(const AlgebraInstance& inst, Rng& rng, SymbolRole role, int max_degree);
MatSeq random_part_element(const AlgebraInstance& inst, Rng& rng, PartTag part, int max_degree);

// 2x2 block element m = [[a, b], [c, d]] over one instance.
struct BlockElement {
  AlgebraInstance inst;
  MatSeq a, b, c, d;

  static BlockElement make(const AlgebraInstance& inst, MatSeq a, MatSeq b, MatSeq c, MatSeq d);
  static BlockElement unit(const AlgebraInstance& inst);
  static BlockElement zero(const AlgebraInstance& inst);
  double norm() const;
};

BlockElement block_mul(const BlockElement& m1, const BlockElement& m2);
BlockElement block_adjoint(const BlockElement& m);
BlockElement block_add(const BlockElement& m1, const BlockElement& m2);
BlockElement block_sub(const BlockElement& m1, const BlockElement& m2);
double block_dist(const BlockElement& m1, const BlockElement& m2);

// Three-part splitting M = M-0 (+) Md (+) M+0 of the block algebra.
enum class BlockPart { MinusStrict, Diagonal, PlusStrict };

BlockElement block_project(const BlockElement& m, BlockPart part);
double block_membership_residual(const BlockElement& m, BlockPart part);
BlockElement random_block_element(const AlgebraInstance& inst, Rng& rng, BlockPart part, int max_degree);

// Draws random elements of every summand pair, multiplies, and checks the
// product lands in the part prescribed by the multiplication table (exact
// support / triangularity membership; cells without a constraint are skipped).
struct TableCheck {
  int samples_per_cell = 0;
  int violations = 0;
  double max_residual = 0.0;
  std::vector<std::string> failures;
  bool pass = false;
};

TableCheck verify_multiplication_table(const AlgebraInstance& inst, int samples, std::uint64_t seed = 7);

}  // namespace eginv

#pragma once

#include "eginv/spaces.hpp"

namespace eginv {

// Dense matrix representation of a linear map between vectorized windowed
// subspaces. The basis descriptors travel with the matrix; composition and
// arithmetic require them to match structurally, not just by dimension.
struct BlockOperator {
  Space domain;
  Space codomain;
  CMat matrix;  // codomain.dim() x domain.dim()
};

BlockOperator identity_op(const Space& space);
BlockOperator zero_op(const Space& domain, const Space& codomain);

BlockOperator compose(const BlockOperator& f, const BlockOperator& g);  // f after g
BlockOperator add(const BlockOperator& f, const BlockOperator& g);
BlockOperator sub(const BlockOperator& f, const BlockOperator& g);
BlockOperator scale(Complex s, const BlockOperator& f);

Stacked apply(const BlockOperator& op, const Stacked& x);

// Assemble [[f11, f12], [f21, f22]] on the concatenated spaces.
BlockOperator assemble2x2(const BlockOperator& f11, const BlockOperator& f12, const BlockOperator& f21,
                          const BlockOperator& f22);

// Codomain enlargement: inserts zero rows for the added basis vectors.
BlockOperator pad_codomain(const BlockOperator& op, const Space& bigger);

// Codomain restriction: drops rows outside `smaller`, verifying the dropped
// rows vanish (up to zero_tol * scale); the restriction is then exact.
BlockOperator restrict_codomain(const BlockOperator& op, const Space& smaller, double zero_tol = 1e-10);

// Domain restriction (compression onto a sub-window of the domain).
BlockOperator restrict_domain(const BlockOperator& op, const Space& smaller);

double fro_norm(const BlockOperator& op);
double deviation_from_identity(const BlockOperator& op);  // ||matrix - I||_F

struct SvdInfo {
  double sigma_max = 0;
  double sigma_min = 0;
  double cond = std::numeric_limits<double>::infinity();
  bool invertible(double ratio) const { return sigma_max > 0 && sigma_min > ratio * sigma_max; }
};

SvdInfo svd_analyze(const CMat& m);
inline SvdInfo svd_analyze(const BlockOperator& op) { return svd_analyze(op.matrix); }

// Dense LU solve; fails when the matrix is numerically singular.
CVec solve_dense(const CMat& m, const CVec& rhs);
CMat invert_dense(const CMat& m);

}  // namespace eginv

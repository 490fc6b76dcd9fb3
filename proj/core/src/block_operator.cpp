#include "eginv/block_operator.hpp"

#include <Eigen/SVD>

namespace eginv {

namespace {

void require_spaces(bool ok, const std::string& what, const Space& a, const Space& b) {
  if (!ok)
    fail(ErrorKind::DimensionMismatch, what + ": basis descriptors differ: " + a.describe() + " vs " + b.describe());
}

// Index map of `inner` basis vectors into `outer` (same parts/shapes, inner
// windows contained in outer windows).
std::vector<int> embedding(const Space& inner, const Space& outer, const char* what) {
  if (!(inner.inst == outer.inst) || inner.comps.size() != outer.comps.size())
    fail(ErrorKind::DimensionMismatch, std::string(what) + ": incompatible spaces " + inner.describe() +
                                           " vs " + outer.describe());
  std::vector<int> map;
  map.reserve(inner.dim());
  for (size_t ci = 0; ci < inner.comps.size(); ++ci) {
    const auto& ic = inner.comps[ci];
    const auto& oc = outer.comps[ci];
    if (ic.part != oc.part || ic.rows != oc.rows || ic.cols != oc.cols || !oc.window.contains(ic.window))
      fail(ErrorKind::DimensionMismatch, std::string(what) + ": component " + std::to_string(ci) +
                                             " not embeddable: " + inner.describe() + " vs " + outer.describe());
    const int o_off = component_offset(outer, static_cast<int>(ci));
    if (inner.inst.kind == AlgebraKind::TriangularMatrix) {
      const int d = component_dim(inner, static_cast<int>(ci));
      for (int k = 0; k < d; ++k) map.push_back(o_off + k);
    } else {
      const int per = ic.rows * ic.cols;
      for (int j = ic.window.lo; j <= ic.window.hi; ++j)
        for (int k = 0; k < per; ++k) map.push_back(o_off + (j - oc.window.lo) * per + k);
    }
  }
  return map;
}

}  // namespace

BlockOperator identity_op(const Space& space) {
  const int n = space.dim();
  return BlockOperator{space, space, CMat::Identity(n, n)};
}

BlockOperator zero_op(const Space& domain, const Space& codomain) {
  return BlockOperator{domain, codomain, CMat::Zero(codomain.dim(), domain.dim())};
}

BlockOperator compose(const BlockOperator& f, const BlockOperator& g) {
  require_spaces(g.codomain == f.domain, "compose", g.codomain, f.domain);
  return BlockOperator{g.domain, f.codomain, f.matrix * g.matrix};
}

BlockOperator add(const BlockOperator& f, const BlockOperator& g) {
  require_spaces(f.domain == g.domain && f.codomain == g.codomain, "add", f.domain, g.domain);
  return BlockOperator{f.domain, f.codomain, f.matrix + g.matrix};
}

BlockOperator sub(const BlockOperator& f, const BlockOperator& g) {
  require_spaces(f.domain == g.domain && f.codomain == g.codomain, "sub", f.domain, g.domain);
  return BlockOperator{f.domain, f.codomain, f.matrix - g.matrix};
}

BlockOperator scale(Complex s, const BlockOperator& f) {
  return BlockOperator{f.domain, f.codomain, s * f.matrix};
}

Stacked apply(const BlockOperator& op, const Stacked& x) {
  return unvec(op.codomain, op.matrix * vec(op.domain, x));
}

BlockOperator assemble2x2(const BlockOperator& f11, const BlockOperator& f12, const BlockOperator& f21,
                          const BlockOperator& f22) {
  require_spaces(f11.domain == f21.domain, "assemble", f11.domain, f21.domain);
  require_spaces(f12.domain == f22.domain, "assemble", f12.domain, f22.domain);
  require_spaces(f11.codomain == f12.codomain, "assemble", f11.codomain, f12.codomain);
  require_spaces(f21.codomain == f22.codomain, "assemble", f21.codomain, f22.codomain);
  Space domain = concat(f11.domain, f12.domain);
  Space codomain = concat(f11.codomain, f21.codomain);
  CMat m(codomain.dim(), domain.dim());
  const int r0 = f11.codomain.dim(), c0 = f11.domain.dim();
  m.topLeftCorner(r0, c0) = f11.matrix;
  m.topRightCorner(r0, f12.domain.dim()) = f12.matrix;
  m.bottomLeftCorner(f21.codomain.dim(), c0) = f21.matrix;
  m.bottomRightCorner(f22.codomain.dim(), f22.domain.dim()) = f22.matrix;
  return BlockOperator{std::move(domain), std::move(codomain), std::move(m)};
}

BlockOperator pad_codomain(const BlockOperator& op, const Space& bigger) {
  const auto map = embedding(op.codomain, bigger, "pad_codomain");
  CMat m = CMat::Zero(bigger.dim(), op.domain.dim());
  for (size_t r = 0; r < map.size(); ++r) m.row(map[r]) = op.matrix.row(static_cast<int>(r));
  return BlockOperator{op.domain, bigger, std::move(m)};
}

BlockOperator restrict_codomain(const BlockOperator& op, const Space& smaller, double zero_tol) {
  const auto map = embedding(smaller, op.codomain, "restrict_codomain");
  CMat m(smaller.dim(), op.domain.dim());
  std::vector<bool> kept(op.codomain.dim(), false);
  for (size_t r = 0; r < map.size(); ++r) {
    m.row(static_cast<int>(r)) = op.matrix.row(map[r]);
    kept[map[r]] = true;
  }
  double dropped = 0;
  for (int r = 0; r < op.matrix.rows(); ++r)
    if (!kept[r]) dropped += op.matrix.row(r).squaredNorm();
  dropped = std::sqrt(dropped);
  const double scale = std::max(1.0, op.matrix.norm());
  if (dropped > zero_tol * scale)
    fail(ErrorKind::Internal, "restrict_codomain: dropped rows carry mass " + std::to_string(dropped));
  return BlockOperator{op.domain, smaller, std::move(m)};
}

BlockOperator restrict_domain(const BlockOperator& op, const Space& smaller) {
  const auto map = embedding(smaller, op.domain, "restrict_domain");
  CMat m(op.codomain.dim(), smaller.dim());
  for (size_t c = 0; c < map.size(); ++c) m.col(static_cast<int>(c)) = op.matrix.col(map[c]);
  return BlockOperator{smaller, op.codomain, std::move(m)};
}

double fro_norm(const BlockOperator& op) { return op.matrix.norm(); }

double deviation_from_identity(const BlockOperator& op) {
  if (op.matrix.rows() != op.matrix.cols()) fail(ErrorKind::DimensionMismatch, "deviation_from_identity");
  return (op.matrix - CMat::Identity(op.matrix.rows(), op.matrix.cols())).norm();
}

SvdInfo svd_analyze(const CMat& m) {
  SvdInfo info;
  if (m.rows() == 0 && m.cols() == 0) {
    info.sigma_max = info.sigma_min = 1.0;  // identity on the trivial space
    info.cond = 1.0;
    return info;
  }
  Eigen::BDCSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  info.sigma_max = s.size() ? s(0) : 0.0;
  info.sigma_min = s.size() ? s(s.size() - 1) : 0.0;
  info.cond = info.sigma_min > 0 ? info.sigma_max / info.sigma_min : std::numeric_limits<double>::infinity();
  return info;
}

CVec solve_dense(const CMat& m, const CVec& rhs) {
  if (m.rows() != m.cols() || m.rows() != rhs.size())
    fail(ErrorKind::DimensionMismatch, "solve_dense: shape mismatch");
  Eigen::PartialPivLU<CMat> lu(m);
  CVec x = lu.solve(rhs);
  const double resid = (m * x - rhs).norm();
  if (!(resid <= 1e-6 * (m.norm() * x.norm() + rhs.norm() + 1.0)))
    fail(ErrorKind::SingularOperator, "solve_dense: residual " + std::to_string(resid));
  return x;
}

CMat invert_dense(const CMat& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "invert_dense: square required");
  Eigen::PartialPivLU<CMat> lu(m);
  CMat inv = lu.inverse();
  if (!inv.allFinite()) fail(ErrorKind::SingularOperator, "invert_dense: non-finite inverse");
  return inv;
}

}  // namespace eginv

#include "eginv/algebra.hpp"

#include <cmath>

namespace eginv {

namespace {

void check_role_shape(const AlgebraInstance& inst, const MatSeq& x, SymbolRole role, const char* what) {
  auto [r, c] = role_shape(inst, role);
  if (x.rows != r || x.cols != c)
    fail(ErrorKind::PartMismatch, std::string(what) + ": element is " + std::to_string(x.rows) + "x" +
                                      std::to_string(x.cols) + " but corner " + role_name(role) + " is " +
                                      std::to_string(r) + "x" + std::to_string(c));
}

void check_matrix_kind_support(const AlgebraInstance& inst, const MatSeq& x, const char* what) {
  if (inst.kind == AlgebraKind::TriangularMatrix && !x.is_zero() && (x.lo() != 0 || x.hi() != 0))
    fail(ErrorKind::PartMismatch,
         std::string(what) + ": matrix-instance element has nonzero coefficients away from index 0");
}

}  // namespace

MatSeq project(const AlgebraInstance& inst, const MatSeq& x, PartTag part) {
  check_role_shape(inst, x, role_of(part), "project");
  MatSeq out(x.rows, x.cols);
  if (inst.kind == AlgebraKind::TriangularMatrix) {
    check_matrix_kind_support(inst, x, "project");
    if (!x.is_zero()) out.set_coeff(0, mat::project(x.coeff(0), part));
  } else {
    for (const auto& [j, m] : x.coeffs)
      if (seq_keeps(part, j)) out.coeffs.emplace(j, m);
  }
  return out;
}

MatSeq mul(const AlgebraInstance& inst, const MatSeq& x, const MatSeq& y) {
  if (inst.kind == AlgebraKind::TriangularMatrix) {
    check_matrix_kind_support(inst, x, "mul");
    check_matrix_kind_support(inst, y, "mul");
  }
  return conv(x, y);
}

MatSeq adjoint_in(const AlgebraInstance&, const MatSeq& x) { return adjoint(x); }

MatSeq unit_of(const AlgebraInstance& inst, SymbolRole role) {
  switch (role) {
    case SymbolRole::A: return MatSeq::unit(inst.p);
    case SymbolRole::D: return MatSeq::unit(inst.q);
    default: fail(ErrorKind::PartMismatch, "corner " + role_name(role) + " has no unit");
  }
}

MatSeq zero_of(const AlgebraInstance& inst, SymbolRole role) {
  auto [r, c] = role_shape(inst, role);
  return MatSeq::zero(r, c);
}

double membership_residual(const AlgebraInstance& inst, const MatSeq& x, PartTag part) {
  return dist(x, project(inst, x, part));
}

void require_member(const AlgebraInstance& inst, const MatSeq& x, PartTag part, const std::string& name,
                    double tol) {
  double r = membership_residual(inst, x, part);
  if (r > tol)
    fail(ErrorKind::PartMismatch,
         name + " is not in " + part_name(part) + " (membership residual " + std::to_string(r) + ")");
}

MatSeq random_element(const AlgebraInstance& inst, Rng& rng, SymbolRole role, int max_degree) {
  auto [r, c] = role_shape(inst, role);
  MatSeq out(r, c);
  const int lo = inst.kind == AlgebraKind::TriangularMatrix ? 0 : -max_degree;
  const int hi = inst.kind == AlgebraKind::TriangularMatrix ? 0 : max_degree;
  for (int j = lo; j <= hi; ++j) {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < c; ++k) m(i, k) = rng.cgaussian();
    out.set_coeff(j, std::move(m));
  }
  return out;
}

MatSeq random_part_element(const AlgebraInstance& inst, Rng& rng, PartTag part, int max_degree) {
  return project(inst, random_element(inst, rng, role_of(part), max_degree), part);
}

BlockElement BlockElement::make(const AlgebraInstance& inst, MatSeq a, MatSeq b, MatSeq c, MatSeq d) {
  check_role_shape(inst, a, SymbolRole::A, "block element");
  check_role_shape(inst, b, SymbolRole::B, "block element");
  check_role_shape(inst, c, SymbolRole::C, "block element");
  check_role_shape(inst, d, SymbolRole::D, "block element");
  return BlockElement{inst, std::move(a), std::move(b), std::move(c), std::move(d)};
}

BlockElement BlockElement::unit(const AlgebraInstance& inst) {
  return make(inst, unit_of(inst, SymbolRole::A), zero_of(inst, SymbolRole::B), zero_of(inst, SymbolRole::C),
              unit_of(inst, SymbolRole::D));
}

BlockElement BlockElement::zero(const AlgebraInstance& inst) {
  return make(inst, zero_of(inst, SymbolRole::A), zero_of(inst, SymbolRole::B), zero_of(inst, SymbolRole::C),
              zero_of(inst, SymbolRole::D));
}

double BlockElement::norm() const {
  return std::sqrt(a.norm() * a.norm() + b.norm() * b.norm() + c.norm() * c.norm() + d.norm() * d.norm());
}

namespace {
void check_same_instance(const BlockElement& m1, const BlockElement& m2, const char* what) {
  if (!(m1.inst == m2.inst)) fail(ErrorKind::DimensionMismatch, std::string(what) + ": mixed instances");
}
}  // namespace

BlockElement block_mul(const BlockElement& m1, const BlockElement& m2) {
  check_same_instance(m1, m2, "block_mul");
  const auto& I = m1.inst;
  BlockElement out = m1;
  out.a = mul(I, m1.a, m2.a) + mul(I, m1.b, m2.c);
  out.b = mul(I, m1.a, m2.b) + mul(I, m1.b, m2.d);
  out.c = mul(I, m1.c, m2.a) + mul(I, m1.d, m2.c);
  out.d = mul(I, m1.c, m2.b) + mul(I, m1.d, m2.d);
  return out;
}

BlockElement block_adjoint(const BlockElement& m) {
  BlockElement out = m;
  out.a = adjoint(m.a);
  out.b = adjoint(m.c);
  out.c = adjoint(m.b);
  out.d = adjoint(m.d);
  return out;
}

BlockElement block_add(const BlockElement& m1, const BlockElement& m2) {
  check_same_instance(m1, m2, "block_add");
  BlockElement out = m1;
  out.a = m1.a + m2.a;
  out.b = m1.b + m2.b;
  out.c = m1.c + m2.c;
  out.d = m1.d + m2.d;
  return out;
}

BlockElement block_sub(const BlockElement& m1, const BlockElement& m2) {
  check_same_instance(m1, m2, "block_sub");
  BlockElement out = m1;
  out.a = m1.a - m2.a;
  out.b = m1.b - m2.b;
  out.c = m1.c - m2.c;
  out.d = m1.d - m2.d;
  return out;
}

double block_dist(const BlockElement& m1, const BlockElement& m2) {
  return block_sub(m1, m2).norm();
}

namespace {
// Per-block part tags of M-0, Md, M+0 (Md has zero off-diagonal corners).
struct BlockPartTags {
  PartTag a, d;
  bool bc_zero;
  PartTag b, c;  // valid when !bc_zero
};

BlockPartTags tags_of(BlockPart part) {
  switch (part) {
    case BlockPart::MinusStrict:
      return {PartTag::AMinus0, PartTag::DMinus0, false, PartTag::BMinus, PartTag::CMinus};
    case BlockPart::Diagonal:
      return {PartTag::Ad, PartTag::Dd, true, PartTag::BPlus, PartTag::CPlus};
    case BlockPart::PlusStrict:
      return {PartTag::APlus0, PartTag::DPlus0, false, PartTag::BPlus, PartTag::CPlus};
  }
  fail(ErrorKind::Internal, "bad BlockPart");
}
}  // namespace

BlockElement block_project(const BlockElement& m, BlockPart part) {
  const auto t = tags_of(part);
  BlockElement out = m;
  out.a = project(m.inst, m.a, t.a);
  out.d = project(m.inst, m.d, t.d);
  if (t.bc_zero) {
    out.b = zero_of(m.inst, SymbolRole::B);
    out.c = zero_of(m.inst, SymbolRole::C);
  } else {
    out.b = project(m.inst, m.b, t.b);
    out.c = project(m.inst, m.c, t.c);
  }
  return out;
}

double block_membership_residual(const BlockElement& m, BlockPart part) {
  return block_dist(m, block_project(m, part));
}

BlockElement random_block_element(const AlgebraInstance& inst, Rng& rng, BlockPart part, int max_degree) {
  const auto t = tags_of(part);
  BlockElement out = BlockElement::zero(inst);
  out.a = random_part_element(inst, rng, t.a, max_degree);
  out.d = random_part_element(inst, rng, t.d, max_degree);
  if (!t.bc_zero) {
    out.b = random_part_element(inst, rng, t.b, max_degree);
    out.c = random_part_element(inst, rng, t.c, max_degree);
  }
  return out;
}

TableCheck verify_multiplication_table(const AlgebraInstance& inst, int samples, std::uint64_t seed) {
  if (samples < 1) fail(ErrorKind::PreconditionFailed, "verify_multiplication_table: samples must be >= 1");
  struct Cell {
    BlockPart lhs, rhs, result;
  };
  // The two (M-0)x(M+0) cells are unconstrained and therefore not checked.
  const Cell cells[] = {
      {BlockPart::MinusStrict, BlockPart::MinusStrict, BlockPart::MinusStrict},
      {BlockPart::MinusStrict, BlockPart::Diagonal, BlockPart::MinusStrict},
      {BlockPart::Diagonal, BlockPart::MinusStrict, BlockPart::MinusStrict},
      {BlockPart::Diagonal, BlockPart::Diagonal, BlockPart::Diagonal},
      {BlockPart::Diagonal, BlockPart::PlusStrict, BlockPart::PlusStrict},
      {BlockPart::PlusStrict, BlockPart::Diagonal, BlockPart::PlusStrict},
      {BlockPart::PlusStrict, BlockPart::PlusStrict, BlockPart::PlusStrict},
  };
  auto part_str = [](BlockPart p) {
    switch (p) {
      case BlockPart::MinusStrict: return "M-0";
      case BlockPart::Diagonal: return "Md";
      default: return "M+0";
    }
  };

  TableCheck out;
  out.samples_per_cell = samples;
  Rng rng(seed);
  const int deg = inst.kind == AlgebraKind::Sequence ? 3 : 0;
  for (const auto& cell : cells) {
    for (int s = 0; s < samples; ++s) {
      BlockElement lhs = random_block_element(inst, rng, cell.lhs, deg);
      BlockElement rhs = random_block_element(inst, rng, cell.rhs, deg);
      double r = block_membership_residual(block_mul(lhs, rhs), cell.result);
      out.max_residual = std::max(out.max_residual, r);
      if (r != 0.0) {
        ++out.violations;
        out.failures.push_back(std::string(part_str(cell.lhs)) + " * " + part_str(cell.rhs) +
                               " escaped " + part_str(cell.result) + " (residual " + std::to_string(r) + ")");
      }
    }
  }
  out.pass = out.violations == 0;
  return out;
}

}  // namespace eginv

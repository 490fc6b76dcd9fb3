#include "eginv/spaces.hpp"

#include <limits>
#include <sstream>

namespace eginv {

namespace {

constexpr int kNoBound = std::numeric_limits<int>::max();

// Half-line bounds of a part's coefficient index set (sequence instance).
void part_bounds(PartTag part, int& lo, int& hi) {
  lo = -kNoBound;
  hi = kNoBound;
  switch (part) {
    case PartTag::APlus:
    case PartTag::BPlus:
    case PartTag::DPlus:
      lo = 0;
      break;
    case PartTag::AMinus:
    case PartTag::CMinus:
    case PartTag::DMinus:
      hi = 0;
      break;
    case PartTag::APlus0:
    case PartTag::CPlus:
    case PartTag::DPlus0:
      lo = 1;
      break;
    case PartTag::AMinus0:
    case PartTag::BMinus:
    case PartTag::DMinus0:
      hi = -1;
      break;
    case PartTag::Ad:
    case PartTag::Dd:
      lo = hi = 0;
      break;
  }
}

}  // namespace

Window clip_to_part(const AlgebraInstance& inst, PartTag part, Window range) {
  if (range.empty()) return Window{0, -1};
  if (inst.kind == AlgebraKind::TriangularMatrix) return Window{0, 0};
  int lo, hi;
  part_bounds(part, lo, hi);
  return Window{std::max(range.lo, lo), std::min(range.hi, hi)};
}

Window part_range(const AlgebraInstance& inst, PartTag part, int radius) {
  return clip_to_part(inst, part, Window{-radius, radius});
}

int Space::dim() const {
  int d = 0;
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) d += component_dim(*this, ci);
  return d;
}

std::string Space::describe() const {
  std::ostringstream os;
  os << (inst.kind == AlgebraKind::TriangularMatrix ? "mat" : "seq") << "{";
  for (size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    if (i) os << ", ";
    os << part_name(c.part) << " " << c.rows << "x" << c.cols;
    if (inst.kind == AlgebraKind::Sequence) os << " [" << c.window.lo << "," << c.window.hi << "]";
  }
  os << "}";
  return os.str();
}

Space make_space(const AlgebraInstance& inst, SpaceSign sign, int radius) {
  auto comp = [&](PartTag part, SymbolRole role) {
    auto [r, c] = role_shape(inst, role);
    return SpaceComponent{part, r, c, part_range(inst, part, radius)};
  };
  Space s{inst, {}};
  switch (sign) {
    case SpaceSign::XPlus:
      s.comps = {comp(PartTag::APlus, SymbolRole::A), comp(PartTag::BPlus, SymbolRole::B)};
      break;
    case SpaceSign::XMinus:
      s.comps = {comp(PartTag::AMinus0, SymbolRole::A), comp(PartTag::BMinus, SymbolRole::B)};
      break;
    case SpaceSign::YPlus:
      s.comps = {comp(PartTag::CPlus, SymbolRole::C), comp(PartTag::DPlus0, SymbolRole::D)};
      break;
    case SpaceSign::YMinus:
      s.comps = {comp(PartTag::CMinus, SymbolRole::C), comp(PartTag::DMinus, SymbolRole::D)};
      break;
  }
  return s;
}

Space single_part_space(const AlgebraInstance& inst, PartTag part, int radius) {
  auto [r, c] = role_shape(inst, role_of(part));
  return Space{inst, {SpaceComponent{part, r, c, part_range(inst, part, radius)}}};
}

Space concat(const Space& a, const Space& b) {
  if (!(a.inst == b.inst)) fail(ErrorKind::DimensionMismatch, "concat: mixed instances");
  Space s = a;
  s.comps.insert(s.comps.end(), b.comps.begin(), b.comps.end());
  return s;
}

int component_dim(const Space& space, int ci) {
  const auto& c = space.comps.at(ci);
  if (space.inst.kind == AlgebraKind::TriangularMatrix) return mat::part_dim(c.part, c.rows);
  return c.window.size() * c.rows * c.cols;
}

int component_offset(const Space& space, int ci) {
  int off = 0;
  for (int i = 0; i < ci; ++i) off += component_dim(space, i);
  return off;
}

Stacked zero_stacked(const Space& space) {
  Stacked x;
  x.comps.reserve(space.comps.size());
  for (const auto& c : space.comps) x.comps.emplace_back(MatSeq::zero(c.rows, c.cols));
  return x;
}

MatSeq basis_at(const Space& space, int ci, int local) {
  const auto& c = space.comps.at(ci);
  MatSeq out(c.rows, c.cols);
  if (space.inst.kind == AlgebraKind::TriangularMatrix) {
    int n = 0;
    for (int i = 0; i < c.rows; ++i)
      for (int j = 0; j < c.cols; ++j)
        if (mat_keeps(c.part, i, j)) {
          if (n == local) {
            CMat e = CMat::Zero(c.rows, c.cols);
            e(i, j) = 1.0;
            out.set_coeff(0, std::move(e));
            return out;
          }
          ++n;
        }
    fail(ErrorKind::Internal, "basis_at: index out of range");
  }
  const int per = c.rows * c.cols;
  const int j = c.window.lo + local / per;
  const int rem = local % per;
  CMat e = CMat::Zero(c.rows, c.cols);
  e(rem / c.cols, rem % c.cols) = 1.0;
  out.set_coeff(j, std::move(e));
  return out;
}

void vec_component(const Space& space, int ci, const MatSeq& x, CVec& out) {
  const auto& c = space.comps.at(ci);
  if (x.rows != c.rows || x.cols != c.cols)
    fail(ErrorKind::DimensionMismatch, "vec: component shape mismatch in " + space.describe());
  const int off = component_offset(space, ci);
  if (space.inst.kind == AlgebraKind::TriangularMatrix) {
    if (!x.is_zero() && (x.lo() < 0 || x.hi() > 0))
      fail(ErrorKind::PartMismatch, "vec: matrix-instance element with off-zero support");
    const CMat m = x.coeff(0);
    int n = 0;
    for (int i = 0; i < c.rows; ++i)
      for (int j = 0; j < c.cols; ++j) {
        if (mat_keeps(c.part, i, j)) {
          out[off + n++] = m(i, j);
        } else if (m(i, j) != Complex(0, 0)) {
          fail(ErrorKind::PartMismatch,
               "vec: entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside part " +
                   part_name(c.part));
        }
      }
    return;
  }
  const int per = c.rows * c.cols;
  for (const auto& [j, m] : x.coeffs) {
    if (j < c.window.lo || j > c.window.hi)
      fail(ErrorKind::WindowTooSmall, "vec: coefficient " + std::to_string(j) + " outside window [" +
                                          std::to_string(c.window.lo) + "," + std::to_string(c.window.hi) +
                                          "] of " + part_name(c.part));
    const int base = off + (j - c.window.lo) * per;
    for (int i = 0; i < c.rows; ++i)
      for (int k = 0; k < c.cols; ++k) out[base + i * c.cols + k] = m(i, k);
  }
}

CVec vec(const Space& space, const Stacked& x) {
  if (static_cast<int>(x.comps.size()) != static_cast<int>(space.comps.size()))
    fail(ErrorKind::DimensionMismatch, "vec: component count mismatch");
  CVec out = CVec::Zero(space.dim());
  for (int ci = 0; ci < static_cast<int>(space.comps.size()); ++ci) vec_component(space, ci, x.comps[ci], out);
  return out;
}

Stacked unvec(const Space& space, const CVec& v) {
  if (v.size() != space.dim()) fail(ErrorKind::DimensionMismatch, "unvec: length mismatch");
  Stacked x = zero_stacked(space);
  for (int ci = 0; ci < static_cast<int>(space.comps.size()); ++ci) {
    const auto& c = space.comps[ci];
    const int off = component_offset(space, ci);
    if (space.inst.kind == AlgebraKind::TriangularMatrix) {
      CMat m = CMat::Zero(c.rows, c.cols);
      int n = 0;
      for (int i = 0; i < c.rows; ++i)
        for (int j = 0; j < c.cols; ++j)
          if (mat_keeps(c.part, i, j)) m(i, j) = v[off + n++];
      x.comps[ci].set_coeff(0, std::move(m));
    } else {
      const int per = c.rows * c.cols;
      for (int j = c.window.lo; j <= c.window.hi; ++j) {
        CMat m(c.rows, c.cols);
        const int base = off + (j - c.window.lo) * per;
        for (int i = 0; i < c.rows; ++i)
          for (int k = 0; k < c.cols; ++k) m(i, k) = v[base + i * c.cols + k];
        x.comps[ci].set_coeff(j, std::move(m));
      }
    }
  }
  return x;
}

double space_residual(const Space& space, int ci, const MatSeq& x) {
  const auto& c = space.comps.at(ci);
  MatSeq kept = project(space.inst, x, c.part);
  if (space.inst.kind == AlgebraKind::Sequence) {
    MatSeq windowed(kept.rows, kept.cols);
    for (const auto& [j, m] : kept.coeffs)
      if (j >= c.window.lo && j <= c.window.hi) windowed.coeffs.emplace(j, m);
    kept = std::move(windowed);
  }
  return dist(x, kept);
}

}  // namespace eginv

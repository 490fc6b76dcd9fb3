#include "eginv/matrix_parts.hpp"

namespace eginv::mat {

namespace {
void require_square(const CMat& x, const char* what) {
  if (x.rows() != x.cols())
    fail(ErrorKind::DimensionMismatch, std::string(what) + ": square matrix required, got " +
                                           std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
}
}  // namespace

TriangularPartition split(const CMat& x) {
  require_square(x, "split");
  TriangularPartition out;
  out.strict_lower = project(x, PartTag::AMinus0);
  out.diagonal = project(x, PartTag::Ad);
  out.strict_upper = project(x, PartTag::APlus0);
  return out;
}

CMat project(const CMat& x, PartTag part) {
  require_square(x, "mat::project");
  const int p = static_cast<int>(x.rows());
  CMat out = CMat::Zero(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (mat_keeps(part, i, j)) out(i, j) = x(i, j);
  return out;
}

int part_dim(PartTag part, int p) {
  int n = 0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (mat_keeps(part, i, j)) ++n;
  return n;
}

std::vector<CMat> basis(PartTag part, int p) {
  std::vector<CMat> out;
  out.reserve(part_dim(part, p));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      if (mat_keeps(part, i, j)) {
        CMat e = CMat::Zero(p, p);
        e(i, j) = 1.0;
        out.push_back(std::move(e));
      }
  return out;
}

bool diagonal_invertible(const CMat& x, double ratio) {
  require_square(x, "diagonal_invertible");
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (int i = 0; i < x.rows(); ++i) {
    double a = std::abs(x(i, i));
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return hi > 0.0 && lo > ratio * hi;
}

}  // namespace eginv::mat

#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace eginv {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Pinned numeric policy. The bundled fixtures are exact dyadic rationals, so
// the algebraic identities hold on them to roundoff; derived quantities are
// judged against these thresholds.
struct Tolerances {
  double condition = 1e-9;      // (C1)-(C6) residuals, relative to data scale
  double inclusion = 1e-9;      // final membership residuals of a solution
  double invertibility = 1e-8;  // sigma_min / sigma_max cutoff for dense operators
  double equality_rel = 1e-9;   // element equality, relative
  double equality_abs = 1e-12;  // element equality, absolute floor
};

enum class ErrorKind {
  DimensionMismatch,
  PartMismatch,
  WindowTooSmall,
  SingularDiagonal,
  SingularOperator,
  PreconditionFailed,
  NonComposable,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline bool approx_zero(double residual, double scale, const Tolerances& tol = {}) {
  return residual <= std::max(tol.equality_abs, tol.equality_rel * scale);
}

}  // namespace eginv

#pragma once

#include <map>

#include "eginv/types.hpp"

namespace eginv {

// Matrix Laurent polynomial: a finitely supported map from the coefficient
// index j to a complex rows x cols matrix. Arithmetic is exact support
// arithmetic; coefficients that are exactly zero are not stored.
struct MatSeq {
  int rows = 0;
  int cols = 0;
  std::map<int, CMat> coeffs;

  MatSeq() = default;
  MatSeq(int r, int c) : rows(r), cols(c) {}

  static MatSeq constant(CMat m) {
    MatSeq s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    s.set_coeff(0, std::move(m));
    return s;
  }
  static MatSeq unit(int n) { return constant(CMat::Identity(n, n)); }
  static MatSeq zero(int r, int c) { return MatSeq(r, c); }

  CMat coeff(int j) const {
    auto it = coeffs.find(j);
    return it == coeffs.end() ? CMat::Zero(rows, cols) : it->second;
  }
  void set_coeff(int j, CMat m);
  void add_coeff(int j, const CMat& m);

  bool is_zero() const { return coeffs.empty(); }
  int lo() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
  int hi() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
  int degree() const;  // max |j| over the support, 0 when zero
  double norm() const;
  double max_abs() const;
};

MatSeq operator+(const MatSeq& f, const MatSeq& g);
MatSeq operator-(const MatSeq& f, const MatSeq& g);
MatSeq operator-(const MatSeq& f);
MatSeq operator*(Complex s, const MatSeq& f);

// Cauchy product (f g)_k = sum_j f_j g_{k-j}; requires f.cols == g.rows.
MatSeq conv(const MatSeq& f, const MatSeq& g);

// Involution (f*)_j = (f_{-j})^H.
MatSeq adjoint(const MatSeq& f);

// Multiplication by z^k: moves coefficient j to j + k.
MatSeq shift(const MatSeq& f, int k);

double dist(const MatSeq& f, const MatSeq& g);

// Signed subspaces of the sequence algebra, by coefficient index.
enum class SeqSpaceTag { WPlus, WMinus, Wd, WPlus0, WMinus0 };

bool seq_space_keeps(SeqSpaceTag tag, int j);
MatSeq project(const MatSeq& f, SeqSpaceTag tag);

// Pointwise evaluation at z on the unit circle (test oracle helper).
CMat evaluate(const MatSeq& f, Complex z);

// Determinant as a scalar Laurent polynomial (Laplace expansion; square only).
MatSeq seq_det(const MatSeq& f);

}  // namespace eginv

#include "eginv/matseq.hpp"

#include <cmath>

namespace eginv {

namespace {
bool exactly_zero(const CMat& m) { return m.isZero(0.0); }

void check_shape(const MatSeq& f, const MatSeq& g, const char* what) {
  if (f.rows != g.rows || f.cols != g.cols)
    fail(ErrorKind::DimensionMismatch, std::string(what) + ": shapes " + std::to_string(f.rows) + "x" +
                                           std::to_string(f.cols) + " vs " + std::to_string(g.rows) + "x" +
                                           std::to_string(g.cols));
}
}  // namespace

void MatSeq::set_coeff(int j, CMat m) {
  if (m.rows() != rows || m.cols() != cols)
    fail(ErrorKind::DimensionMismatch, "set_coeff: coefficient shape mismatch");
  if (exactly_zero(m))
    coeffs.erase(j);
  else
    coeffs[j] = std::move(m);
}

void MatSeq::add_coeff(int j, const CMat& m) {
  auto it = coeffs.find(j);
  if (it == coeffs.end()) {
    if (!exactly_zero(m)) coeffs.emplace(j, m);
  } else {
    it->second += m;
    if (exactly_zero(it->second)) coeffs.erase(it);
  }
}

int MatSeq::degree() const {
  int d = 0;
  for (const auto& [j, m] : coeffs) d = std::max(d, std::abs(j));
  return d;
}

double MatSeq::norm() const {
  double s = 0;
  for (const auto& [j, m] : coeffs) s += m.squaredNorm();
  return std::sqrt(s);
}

double MatSeq::max_abs() const {
  double s = 0;
  for (const auto& [j, m] : coeffs) s = std::max(s, m.cwiseAbs().maxCoeff());
  return s;
}

MatSeq operator+(const MatSeq& f, const MatSeq& g) {
  check_shape(f, g, "add");
  MatSeq out = f;
  for (const auto& [j, m] : g.coeffs) out.add_coeff(j, m);
  return out;
}

MatSeq operator-(const MatSeq& f, const MatSeq& g) {
  check_shape(f, g, "sub");
  MatSeq out = f;
  for (const auto& [j, m] : g.coeffs) out.add_coeff(j, -m);
  return out;
}

MatSeq operator-(const MatSeq& f) {
  MatSeq out(f.rows, f.cols);
  for (const auto& [j, m] : f.coeffs) out.coeffs.emplace(j, -m);
  return out;
}

MatSeq operator*(Complex s, const MatSeq& f) {
  MatSeq out(f.rows, f.cols);
  if (s == Complex(0, 0)) return out;
  for (const auto& [j, m] : f.coeffs) out.coeffs.emplace(j, s * m);
  return out;
}

MatSeq conv(const MatSeq& f, const MatSeq& g) {
  if (f.cols != g.rows)
    fail(ErrorKind::DimensionMismatch, "conv: inner dimensions " + std::to_string(f.cols) + " vs " +
                                           std::to_string(g.rows));
  MatSeq out(f.rows, g.cols);
  for (const auto& [i, a] : f.coeffs)
    for (const auto& [j, b] : g.coeffs) out.add_coeff(i + j, a * b);
  return out;
}

MatSeq adjoint(const MatSeq& f) {
  MatSeq out(f.cols, f.rows);
  for (const auto& [j, m] : f.coeffs) out.coeffs.emplace(-j, m.adjoint());
  return out;
}

MatSeq shift(const MatSeq& f, int k) {
  MatSeq out(f.rows, f.cols);
  for (const auto& [j, m] : f.coeffs) out.coeffs.emplace(j + k, m);
  return out;
}

double dist(const MatSeq& f, const MatSeq& g) { return (f - g).norm(); }

bool seq_space_keeps(SeqSpaceTag tag, int j) {
  switch (tag) {
    case SeqSpaceTag::WPlus: return j >= 0;
    case SeqSpaceTag::WMinus: return j <= 0;
    case SeqSpaceTag::Wd: return j == 0;
    case SeqSpaceTag::WPlus0: return j >= 1;
    case SeqSpaceTag::WMinus0: return j <= -1;
  }
  return false;
}

MatSeq project(const MatSeq& f, SeqSpaceTag tag) {
  MatSeq out(f.rows, f.cols);
  for (const auto& [j, m] : f.coeffs)
    if (seq_space_keeps(tag, j)) out.coeffs.emplace(j, m);
  return out;
}

CMat evaluate(const MatSeq& f, Complex z) {
  CMat out = CMat::Zero(f.rows, f.cols);
  for (const auto& [j, m] : f.coeffs) out += std::pow(z, j) * m;
  return out;
}

MatSeq seq_det(const MatSeq& f) {
  if (f.rows != f.cols) fail(ErrorKind::DimensionMismatch, "seq_det: square input required");
  const int n = f.rows;
  if (n == 1) {
    MatSeq out(1, 1);
    for (const auto& [j, m] : f.coeffs) out.coeffs.emplace(j, m);
    return out;
  }
  // Laplace expansion along the first row; fine at desk scale.
  MatSeq out(1, 1);
  for (int k = 0; k < n; ++k) {
    MatSeq entry(1, 1);
    for (const auto& [j, m] : f.coeffs) entry.add_coeff(j, m.block(0, k, 1, 1));
    if (entry.is_zero()) continue;
    MatSeq minor(n - 1, n - 1);
    for (const auto& [j, m] : f.coeffs) {
      CMat sub(n - 1, n - 1);
      for (int r = 1; r < n; ++r)
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == k) continue;
          sub(r - 1, cc++) = m(r, c);
        }
      minor.add_coeff(j, sub);
    }
    MatSeq term = conv(entry, seq_det(minor));
    if (k % 2 == 1) term = -term;
    out = out + term;
  }
  return out;
}

}  // namespace eginv

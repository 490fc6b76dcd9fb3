#pragma once

#include <string>
#include <utility>

#include "eginv/types.hpp"

namespace eginv {

// Summand tags of the admissible 2x2 block *-algebra M = [[A,B],[C,D]]:
// A and D carry three-part splittings (strict minus / diagonal / strict plus),
// B and C two-part splittings with C- = (B+)* and C+ = (B-)*.
enum class PartTag {
  APlus0,
  Ad,
  AMinus0,
  APlus,
  AMinus,
  BPlus,
  BMinus,
  CPlus,
  CMinus,
  DPlus0,
  Dd,
  DMinus0,
  DPlus,
  DMinus,
};

// Which corner of M a multiplier lives in.
enum class SymbolRole { A, B, C, D };

enum class AlgebraKind { TriangularMatrix, Sequence };

// One of the two built-in instantiations:
//  - TriangularMatrix: A = B = C = D = C^{p x p}, parts given by triangular
//    index sets (only defined for p == q);
//  - Sequence: matrix Laurent polynomials (finitely supported Fourier
//    coefficients), parts given by coefficient-index half lines.
struct AlgebraInstance {
  AlgebraKind kind = AlgebraKind::TriangularMatrix;
  int p = 1;
  int q = 1;

  static AlgebraInstance triangular(int p) {
    if (p < 1) fail(ErrorKind::DimensionMismatch, "triangular instance: p must be >= 1");
    return AlgebraInstance{AlgebraKind::TriangularMatrix, p, p};
  }
  static AlgebraInstance sequence(int p, int q) {
    if (p < 1 || q < 1) fail(ErrorKind::DimensionMismatch, "sequence instance: dims must be >= 1");
    return AlgebraInstance{AlgebraKind::Sequence, p, q};
  }
  bool operator==(const AlgebraInstance&) const = default;
};

SymbolRole role_of(PartTag part);
std::string part_name(PartTag part);
std::string role_name(SymbolRole role);

// rows x cols of the corner a role occupies.
std::pair<int, int> role_shape(const AlgebraInstance& inst, SymbolRole role);

// Index-set predicates defining the parts in each instance.
bool mat_keeps(PartTag part, int i, int j);  // entry (i,j) of a square matrix
bool seq_keeps(PartTag part, int j);         // Fourier coefficient index j

// Complement of a part inside its corner (B+ <-> B-, A+ <-> A-0, ...).
// Ad and Dd have no single-tag complement and are rejected.
PartTag complement_of(PartTag part);

}  // namespace eginv

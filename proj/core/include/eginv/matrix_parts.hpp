#pragma once

#include <vector>

#include "eginv/parts.hpp"
#include "eginv/types.hpp"

namespace eginv::mat {

// Triangular-part calculus on square complex matrices (the scalar substrate of
// the finite-matrix instance).

struct TriangularPartition {
  CMat strict_lower;
  CMat diagonal;
  CMat strict_upper;
};

// Exact split: strict_lower + diagonal + strict_upper reconstructs the input.
TriangularPartition split(const CMat& x);

// Zeroes out the entries outside the part's index set. Square input only.
CMat project(const CMat& x, PartTag part);

// Dimension of a part as a subspace of C^{p x p}.
int part_dim(PartTag part, int p);

// Canonical elementary-matrix basis of a part, ordered row-major by (i, j)
// within the part's index set (so the p = 2 upper-triangular basis is
// E11, E12, E22 and the lower-triangular one E11, E21, E22).
std::vector<CMat> basis(PartTag part, int p);

// Invertibility of a triangular matrix, decided on its diagonal entries:
// min |d_i| / max |d_i| must exceed `ratio` (and the diagonal be nonzero).
bool diagonal_invertible(const CMat& x, double ratio);

}  // namespace eginv::mat

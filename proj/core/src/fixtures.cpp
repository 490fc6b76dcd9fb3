#include "eginv/fixtures.hpp"

#include "eginv/io.hpp"

namespace eginv::fixtures {

namespace {

const std::string kTriangularP3 = R"({
  "format": "eginv-dataset",
  "instance": "matrix",
  "p": 3,
  "q": 3,
  "alpha": [
    [[-0.25, 0.0], [0.25, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [-0.375, 0.0], [-0.5, 0.0]],
    [[0.0, 0.0], [0.0, 0.0], [0.75, 0.0]]
  ],
  "beta": [
    [[0.25, 0.0], [0.75, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [-0.125, 0.0], [0.5, 0.0]],
    [[0.0, 0.0], [0.0, 0.0], [0.25, 0.0]]
  ],
  "gamma": [
    [[0.25, 0.0], [0.0, 0.0], [0.0, 0.0]],
    [[0.5, 0.0], [-0.125, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [0.75, 0.0], [0.25, 0.0]]
  ],
  "delta": [
    [[0.75, 0.0], [0.0, 0.0], [0.0, 0.0]],
    [[-0.5, 0.0], [-0.375, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [0.25, 0.0], [-0.25, 0.0]]
  ]
}
)";

const std::string kTriangularP3G = R"({
  "format": "eginv-element",
  "instance": "matrix",
  "p": 3,
  "q": 3,
  "rows": 3,
  "cols": 3,
  "value": [
    [[1.0, 0.0], [2.0, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]],
    [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]
  ]
}
)";

const std::string kSingularDiagonalP2 = R"({
  "format": "eginv-dataset",
  "instance": "matrix",
  "p": 2,
  "q": 2,
  "alpha": [
    [[-1.0, 0.0], [-1.0, 0.0]],
    [[0.0, 0.0], [0.0, 0.0]]
  ],
  "beta": [
    [[1.0, 0.0], [1.0, 0.0]],
    [[0.0, 0.0], [1.0, 0.0]]
  ],
  "gamma": [
    [[1.0, 0.0], [0.0, 0.0]],
    [[1.0, 0.0], [1.0, 0.0]]
  ],
  "delta": [
    [[0.0, 0.0], [0.0, 0.0]],
    [[-1.0, 0.0], [-1.0, 0.0]]
  ]
}
)";

const std::string kSingularDiagonalP2G = R"({
  "format": "eginv-element",
  "instance": "matrix",
  "p": 2,
  "q": 2,
  "rows": 2,
  "cols": 2,
  "value": [
    [[1.0, 0.0], [1.0, 0.0]],
    [[0.0, 0.0], [1.0, 0.0]]
  ]
}
)";

const std::string kTrivialMatrixP2 = R"({
  "format": "eginv-dataset",
  "instance": "matrix",
  "p": 2,
  "q": 2,
  "alpha": [
    [[1.0, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [1.0, 0.0]]
  ],
  "beta": [
    [[0.0, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [0.0, 0.0]]
  ],
  "gamma": [
    [[0.0, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [0.0, 0.0]]
  ],
  "delta": [
    [[1.0, 0.0], [0.0, 0.0]],
    [[0.0, 0.0], [1.0, 0.0]]
  ]
}
)";

const std::string kTrivialSequenceP2Q1 = R"({
  "format": "eginv-dataset",
  "instance": "sequence",
  "p": 2,
  "q": 1,
  "alpha": [
    {"j": 0, "matrix": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]]}
  ],
  "beta": [],
  "gamma": [],
  "delta": [
    {"j": 0, "matrix": [[[1.0, 0.0]]]}
  ]
}
)";

}  // namespace

const std::string& triangular_p3_text() { return kTriangularP3; }
const std::string& triangular_p3_g_text() { return kTriangularP3G; }
const std::string& singular_diagonal_p2_text() { return kSingularDiagonalP2; }
const std::string& singular_diagonal_p2_g_text() { return kSingularDiagonalP2G; }
const std::string& trivial_matrix_p2_text() { return kTrivialMatrixP2; }
const std::string& trivial_sequence_p2q1_text() { return kTrivialSequenceP2Q1; }

DataSet triangular_p3() { return parse_dataset(kTriangularP3, "fixture:triangular_p3"); }
MatSeq triangular_p3_g() { return parse_element(kTriangularP3G, "fixture:triangular_p3_g").value; }
DataSet singular_diagonal_p2() { return parse_dataset(kSingularDiagonalP2, "fixture:singular_diagonal_p2"); }
MatSeq singular_diagonal_p2_g() {
  return parse_element(kSingularDiagonalP2G, "fixture:singular_diagonal_p2_g").value;
}
DataSet trivial_matrix_p2() { return parse_dataset(kTrivialMatrixP2, "fixture:trivial_matrix_p2"); }
DataSet trivial_sequence_p2q1() {
  return parse_dataset(kTrivialSequenceP2Q1, "fixture:trivial_sequence_p2q1");
}

}  // namespace eginv::fixtures

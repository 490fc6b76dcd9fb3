#pragma once

#include <string>

#include "eginv/dataset.hpp"

namespace eginv::fixtures {

// Bundled reference problems, embedded so `selftest` runs without the source
// tree. The same documents ship as files under fixtures/.

const std::string& triangular_p3_text();         // 3x3 upper/lower worked example
const std::string& triangular_p3_g_text();       // its unique solution
const std::string& singular_diagonal_p2_text();  // invertible Omega with singular a0, d0
const std::string& singular_diagonal_p2_g_text();
const std::string& trivial_matrix_p2_text();
const std::string& trivial_sequence_p2q1_text();

DataSet triangular_p3();
MatSeq triangular_p3_g();
DataSet singular_diagonal_p2();
MatSeq singular_diagonal_p2_g();
DataSet trivial_matrix_p2();
DataSet trivial_sequence_p2q1();

}  // namespace eginv::fixtures

#pragma once

// Data-parallel builders. Each OpenMP kernel has a serial twin that produces
// bit-identical output; the serial versions are the reference for tests and
// the baseline for bench_kernels.

#include "ga/clifford.hpp"
#include "ga/linalg.hpp"
#include "ga/metric.hpp"

namespace ga::kernels {

CayleyTable build_cayley_table(const Algebra &algebra);
CayleyTable build_cayley_table_serial(const Algebra &algebra);

// 2^n x 2^n matrix of blade scalar products e_I . e_J, rows and columns in
// canonical blade order.
Matrix blade_gram_matrix(const Algebra &algebra);
Matrix blade_gram_matrix_serial(const Algebra &algebra);

// Number of OpenMP threads a parallel region would use.
int max_threads();

} // namespace ga::kernels

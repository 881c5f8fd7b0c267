#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace linecong {

using QVector = std::vector<mpq_class>;
/// Row-major, every row of the same length.
using QMatrix = std::vector<QVector>;

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(QMatrix m);

/// Basis of { v : m v = 0 } for a matrix with `cols` columns.  `m` may be
/// empty (no rows), in which case the standard basis is returned.
std::vector<QVector> nullspace(QMatrix m, std::size_t cols);

}  // namespace linecong

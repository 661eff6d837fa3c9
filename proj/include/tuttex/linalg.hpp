#pragma once

// Exact Gaussian elimination over the rationals. Small dense systems only:
// interpolation, compatibility-matrix ranks and the uncrossing tables.

#include <cstddef>
#include <vector>

#include "tuttex/rational.hpp"

namespace tuttex {

using Matrix = std::vector<std::vector<Rational>>;

// Reduce m in place to reduced row echelon form, pivoting only within the
// first `pivot_cols` columns (any further columns ride along, which is how
// augmented right-hand sides are carried). Returns the pivot column of each
// pivot row, in row order.
inline std::vector<std::size_t> row_reduce(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t matrix_rank(Matrix m) {
  if (m.empty()) return 0;
  return row_reduce(m, m[0].size()).size();
}

}  // namespace tuttex

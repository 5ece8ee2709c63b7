#include "ranklab/linalg.hpp"

#include <cstdlib>

namespace ranklab {

RatMatrix zeros(size_t rows, size_t cols) {
  return RatMatrix(rows, RatVec(cols, Rational(0)));
}

std::optional<RatVec> solve_unique(RatMatrix a, RatVec b) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) return std::nullopt;
  if (cols == 0) return rows == 0 ? std::optional<RatVec>(RatVec{}) : std::nullopt;

  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    // partial pivot: largest magnitude keeps intermediate fractions small
    size_t best = row;
    Rational best_abs = abs(a[row][col]);
    for (size_t r = row + 1; r < rows; ++r) {
      Rational v = abs(a[r][col]);
      if (v > best_abs) {
        best = r;
        best_abs = v;
      }
    }
    if (best_abs == 0) continue;
    std::swap(a[row], a[best]);
    std::swap(b[row], b[best]);

    const Rational pivot = a[row][col];
    for (size_t c = col; c < cols; ++c) a[row][c] /= pivot;
    b[row] /= pivot;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
      b[r] -= factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }

  if (pivot_col.size() < cols) return std::nullopt;  // rank-deficient
  for (size_t r = row; r < rows; ++r) {
    if (b[r] != 0) return std::nullopt;  // inconsistent
  }

  RatVec x(cols, Rational(0));
  for (size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
  return x;
}

}  // namespace ranklab

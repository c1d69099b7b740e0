#include "linalg.hpp"

#include <utility>

#include "spschub/error.hpp"

namespace spschub::detail {

RationalMatrix invert_exact(RationalMatrix m) {
  const std::size_t size = m.size();
  RationalMatrix inv(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t i = 0; i < size; ++i) {
    check_internal(m[i].size() == size, "matrix is not square");
    inv[i][i] = 1;
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    check_internal(pivot < size, "singular basis matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t k = 0; k < size; ++k) {
      m[col][k] *= scale;
      inv[col][k] *= scale;
    }
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t k = 0; k < size; ++k) {
        if (m[col][k] != 0) m[row][k] -= f * m[col][k];
        if (inv[col][k] != 0) inv[row][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

int rank_exact(RationalMatrix m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[rank][col];
      for (std::size_t k = col; k < cols; ++k) m[row][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace spschub::detail

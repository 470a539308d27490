#pragma once

#include <vector>

#include "hcircle/unipoly.hpp"

namespace hcircle {

template <class K>
using Matrix = std::vector<std::vector<K>>;

/// Reduced row echelon form in place; returns the pivot columns.
template <FieldElement K>
std::vector<std::size_t> rref(Matrix<K>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && is_zero(a[sel][col])) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    const K inv = one_of(a[row][col]) / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] = a[row][j] * inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || is_zero(a[i][col])) continue;
      const K factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!is_zero(a[row][j])) a[i][j] = a[i][j] - factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Basis of the right kernel {v : A v = 0} of an r x cols matrix over a field.
/// `zero` fixes the field when A has no rows.
template <FieldElement K>
std::vector<std::vector<K>> nullspace(Matrix<K> a, std::size_t cols, const K& zero) {
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(cols, zero);
    v[free] = one_of(zero);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hcircle

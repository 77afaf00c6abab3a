#pragma once

#include <vector>

namespace grpf {

template <class Field>
using Matrix = std::vector<std::vector<typename Field::value_type>>;

/// Row-reduces a copy of m; returns the rank.
template <class Field>
int matrix_rank(const Field& f, Matrix<Field> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && f.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const auto inv = f.inv(m[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (f.is_zero(m[r][c])) continue;
      const auto factor = f.mul(m[r][c], inv);
      for (std::size_t cc = c; cc < cols; ++cc) m[r][cc] = f.sub(m[r][cc], f.mul(factor, m[rank][cc]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Basis of {x : m x = 0}.
template <class Field>
std::vector<std::vector<typename Field::value_type>> null_space(const Field& f, Matrix<Field> m,
                                                                std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && f.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const auto inv = f.inv(m[rank][c]);
    for (std::size_t cc = 0; cc < cols; ++cc) m[rank][cc] = f.mul(m[rank][cc], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || f.is_zero(m[r][c])) continue;
      const auto factor = m[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] = f.sub(m[r][cc], f.mul(factor, m[rank][cc]));
    }
    pivot_cols.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename Field::value_type>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::value_type> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = f.neg(m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Determinant by Gaussian elimination.
template <class Field>
typename Field::value_type determinant(const Field& f, Matrix<Field> m) {
  const std::size_t n = m.size();
  auto det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && f.is_zero(m[pivot][c])) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const auto inv = f.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(m[r][c])) continue;
      const auto factor = f.mul(m[r][c], inv);
      for (std::size_t cc = c; cc < n; ++cc) m[r][cc] = f.sub(m[r][cc], f.mul(factor, m[c][cc]));
    }
  }
  return det;
}

}  // namespace grpf

#pragma once

// Dense working storage for elimination algorithms.

#include <cstddef>
#include <utility>
#include <vector>

#include "secoh/int_matrix.hpp"

namespace secoh::detail {

struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  Dense() = default;
  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static Dense from(const IntMatrix& m) {
    Dense d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (const auto& e : m.row(i)) d(i, e.col) = e.value;
    }
    return d;
  }

  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = Integer(1);
    return d;
  }

  Integer& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

  IntMatrix to_matrix() const {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (!(*this)(i, j).is_zero()) m.set(i, j, (*this)(i, j));
      }
    }
    return m;
  }
};

}  // namespace secoh::detail

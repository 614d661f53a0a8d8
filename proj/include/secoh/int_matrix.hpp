#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "secoh/integer.hpp"

namespace secoh {

// Exact integer matrix with sparse row storage. Rows keep their entries
// sorted by column and never store zeros.
class IntMatrix {
 public:
  struct Entry {
    std::size_t col;
    Integer value;
  };

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  // rows x cols with d placed on the leading diagonal.
  static IntMatrix diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> d);
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);
  static IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept;

  // Throws std::out_of_range.
  Integer at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Integer& v);
  void add(std::size_t i, std::size_t j, const Integer& v);

  std::span<const Entry> row(std::size_t i) const;
  std::vector<Integer> column(std::size_t j) const;
  std::vector<std::vector<Integer>> columns() const;

  // y = M x. Throws std::invalid_argument on a length mismatch.
  std::vector<Integer> apply(std::span<const Integer> x) const;
  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

  bool is_zero() const noexcept { return nonzeros() == 0; }
  bool is_diagonal() const noexcept;
  // Entries (i, i) for i < min(rows, cols).
  std::vector<Integer> diagonal_entries() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  std::string str() const;

 private:
  void check(std::size_t i, std::size_t j) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

}  // namespace secoh

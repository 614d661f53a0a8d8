#pragma once

// Residue-class elimination for lattices known to contain e*Z^n.
// Residues stay below 2^31 so every product fits in 64 bits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "secoh/int_matrix.hpp"

namespace secoh::detail {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

bool is_prime(std::uint64_t n);

// True when m is a positive modulus small enough for the residue routines.
bool usable_modulus(const Integer& m);

std::uint64_t residue(const Integer& v, std::uint64_t m);

// Fully reduced row echelon form over Z/p, built one row at a time.
// Stored rows are zero in every pivot column except their own (value 1).
class PrimeRref {
 public:
  PrimeRref(std::size_t cols, std::uint64_t p);

  // Entries are (column, residue); duplicates accumulate. Returns true when
  // the row was independent of those already stored.
  bool insert(std::span<const std::pair<std::size_t, std::uint64_t>> row);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t modulus() const noexcept { return p_; }
  // -1 when c is not a pivot column.
  std::ptrdiff_t row_of_pivot(std::size_t c) const { return pivot_row_[c]; }
  std::size_t pivot_column(std::size_t k) const { return pivot_col_[k]; }
  const std::vector<std::uint64_t>& row(std::size_t k) const { return rows_[k]; }
  const std::vector<std::size_t>& free_columns() const noexcept { return free_; }

 private:
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::ptrdiff_t> pivot_row_;
  std::vector<std::size_t> free_;  // non-pivot columns, ascending
  std::vector<std::uint64_t> work_;
};

// Cyclic orders of (Z/e)^rows / span(columns mod e). Not canonicalized.
std::vector<Integer> cokernel_orders_mod(std::size_t rows, const std::vector<std::vector<IntMatrix::Entry>>& columns,
                                         std::uint64_t e);

}  // namespace secoh::detail

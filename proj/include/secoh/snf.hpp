#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "secoh/abelian.hpp"
#include "secoh/int_matrix.hpp"

namespace secoh {

// U * M * V == S with U, V unimodular and S diagonal, s_1 | s_2 | ..., s_i >= 0.
struct SnfResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::size_t rank() const;
  std::vector<Integer> diagonal() const { return S.diagonal_entries(); }
};

// Pivot rule: smallest-magnitude nonzero entry of the remaining block, ties
// broken by lowest (row, col). Output is deterministic.
SnfResult snf(const IntMatrix& m);

// Columns form a saturated basis of {x : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Invariant factors of Z^rows / col(M).
FgAbGroup cokernel_invariants(const IntMatrix& m);

// x with M x = v, or nullopt when v is not in col(M).
// Throws std::invalid_argument when v.size() != rows(M).
std::optional<std::vector<Integer>> solve_membership(const IntMatrix& m, std::span<const Integer> v);

// Reusable solver for many right-hand sides against one matrix.
class MembershipSolver {
 public:
  explicit MembershipSolver(const IntMatrix& m);
  std::optional<std::vector<Integer>> solve(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const { return solve(v).has_value(); }

 private:
  std::size_t rows_;
  SnfResult snf_;
  std::vector<Integer> diag_;
  std::size_t rank_;
};

// A sublattice of Z^n held as a basis in column echelon form: the lowest
// nonzero row of basis vector j is pivot_row(j), strictly increasing in j.
// Coordinates with respect to this basis are found by back substitution.
class EchelonLattice {
 public:
  using SparseColumn = std::vector<IntMatrix::Entry>;  // entries keyed by row

  EchelonLattice() = default;
  explicit EchelonLattice(std::size_t ambient) : ambient_(ambient) {}
  // Any generating set; dependent generators are eliminated.
  static EchelonLattice from_generators(std::size_t ambient, std::vector<std::vector<Integer>> generators);
  // Caller guarantees echelon shape; checked.
  static EchelonLattice from_echelon(std::size_t ambient, std::vector<SparseColumn> basis);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  std::size_t pivot_row(std::size_t j) const { return pivots_.at(j); }
  const SparseColumn& vector(std::size_t j) const { return basis_.at(j); }
  IntMatrix matrix() const;

  std::optional<std::vector<Integer>> coordinates(std::span<const Integer> v) const;
  bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseColumn> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace secoh

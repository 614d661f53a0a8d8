#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "secoh/int_matrix.hpp"
#include "secoh/integer.hpp"

namespace secoh {

// Coordinates of an element with respect to the generators of an FgAbGroup.
struct GroupElement {
  std::vector<Integer> coeffs;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Invariant factors of an arbitrary list of cyclic orders (0 = infinite cyclic):
// torsion factors in divisibility order, units dropped, zeros last.
std::vector<Integer> canonical_invariants(std::vector<Integer> cyclic_orders);

// Finitely generated abelian group Z/d_1 + ... + Z/d_r in canonical form:
// d_1 | d_2 | ... for the nonzero entries, no entry equals 1, zeros last.
class FgAbGroup {
 public:
  FgAbGroup() = default;
  // Throws std::invalid_argument unless already canonical.
  explicit FgAbGroup(std::vector<Integer> invariants);
  static FgAbGroup from_orders(std::vector<Integer> cyclic_orders);
  static FgAbGroup cyclic(std::int64_t n);  // n == 0 gives Z, n == 1 the trivial group
  static FgAbGroup free(std::size_t rank);

  const std::vector<Integer>& invariants() const noexcept { return invariants_; }
  // Number of generators.
  std::size_t rank() const noexcept { return invariants_.size(); }
  std::size_t free_rank() const noexcept;
  std::vector<Integer> torsion() const;
  bool is_finite() const noexcept { return free_rank() == 0; }
  bool is_trivial() const noexcept { return invariants_.empty(); }
  // Throws std::domain_error for infinite groups.
  Integer order() const;
  // 0 for infinite groups, 1 for the trivial group.
  Integer exponent() const;

  GroupElement zero() const { return GroupElement{std::vector<Integer>(rank())}; }
  GroupElement reduce(GroupElement x) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  bool is_canonical(const GroupElement& x) const;

  // Element enumeration of a finite group: mixed radix over the coefficients
  // with the first generator most significant. Throws for infinite groups or
  // when the order does not fit in 63 bits.
  std::uint64_t element_count() const;
  std::uint64_t index_of(const GroupElement& x) const;
  GroupElement element(std::uint64_t index) const;

  // Square diagonal relation matrix diag(d_1, ..., d_r).
  IntMatrix relations() const;

  // "0", "Z2", "Z2 + Z6 + Z", ...
  std::string str() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

 private:
  std::vector<Integer> invariants_;
};

// Z^m / col(relations).
struct PresentedGroup {
  std::size_t ambient_rank = 0;
  IntMatrix relations;  // ambient_rank rows

  // Throws std::invalid_argument when the relation matrix has the wrong height.
  static PresentedGroup make(std::size_t ambient_rank, IntMatrix relations);
  // Block-diagonal copies of a canonical group's relations.
  static PresentedGroup power(const FgAbGroup& b, std::size_t copies);
  FgAbGroup canonical() const;
};

}  // namespace secoh

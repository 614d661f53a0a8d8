#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "secoh/abelian.hpp"
#include "secoh/int_matrix.hpp"

namespace secoh {

using Elem = std::uint32_t;

// Finite group given by its multiplication table: table[x * order + y] = x*y.
class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}

  // Checks, in order: entries in range, Latin square, identity (the given one
  // or the unique one found), inverses, associativity. Throws ValidationError
  // naming the first violation and its witnesses.
  static FiniteGroup validate(std::size_t order, std::vector<Elem> table, std::optional<Elem> identity = std::nullopt);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  // Permutations of {0,1,2} in lexicographic order, (p*q)(i) = p(q(i)).
  static FiniteGroup symmetric3();
  // (x1, y1) * (x2, y2); element index x * |b| + y.
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Cayley table of a finite abelian group in its element enumeration order.
  static FiniteGroup from_abelian(const FgAbGroup& a);

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem x, Elem y) const { return table_[x * order_ + y]; }
  Elem inverse(Elem x) const { return inverse_[x]; }
  // Ordered product, identity when empty.
  Elem product(std::span<const Elem> xs) const;
  bool is_abelian() const;
  const std::vector<Elem>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup(std::size_t order, std::vector<Elem> table, Elem identity, std::vector<Elem> inverse)
      : order_(order), table_(std::move(table)), identity_(identity), inverse_(std::move(inverse)) {}

  std::size_t order_ = 1;
  std::vector<Elem> table_;
  Elem identity_ = 0;
  std::vector<Elem> inverse_;
};

// Action of a finite group on an FgAbGroup by automorphisms. mats[g] acts on
// generator coordinates: g.x = mats[g] x, reduced.
class GAction {
 public:
  GAction() = default;

  static GAction trivial(const FiniteGroup& g, const FgAbGroup& module);
  // g acts as multiplication by scalars[g].
  static GAction by_scalars(const FiniteGroup& g, const FgAbGroup& module, const std::vector<Integer>& scalars);

  const FiniteGroup& group() const noexcept { return group_; }
  const FgAbGroup& module() const noexcept { return module_; }
  const IntMatrix& matrix(Elem g) const { return mats_.at(g); }
  const std::vector<IntMatrix>& matrices() const noexcept { return mats_; }
  bool is_trivial() const noexcept { return trivial_; }

  GroupElement apply(Elem g, const GroupElement& x) const;

  friend GAction validate_action(const FiniteGroup& g, const FgAbGroup& module, std::vector<IntMatrix> mats);

 private:
  FiniteGroup group_;
  FgAbGroup module_;
  std::vector<IntMatrix> mats_;
  bool trivial_ = true;
};

// Checks, in order: one square matrix per element, well-definedness of every
// matrix on the module, identity fixed, automorphism (surjective, hence
// bijective), homomorphism mats[g] mats[h] = mats[gh]. Throws ValidationError
// naming the axiom and witness elements.
GAction validate_action(const FiniteGroup& g, const FgAbGroup& module, std::vector<IntMatrix> mats);

// Map G^2 -> A, dense table in mixed-radix order (first argument major).
struct Cochain2 {
  GAction action;
  std::vector<GroupElement> values;

  static Cochain2 zero(const GAction& action);
  const GroupElement& at(Elem g, Elem h) const { return values[g * action.group().order() + h]; }
};

// Map G^3 -> A. Holds candidate tables; validity is checked separately.
struct Cocycle3 {
  GAction action;
  std::vector<GroupElement> values;

  static Cocycle3 zero(const GAction& action);
  const GroupElement& at(Elem a, Elem b, Elem c) const {
    const std::size_t n = action.group().order();
    return values[(a * n + b) * n + c];
  }
};

struct CocycleCheck {
  bool ok = true;
  std::array<Elem, 4> witness{};  // first failing quadruple in enumeration order
};

// g1.k(g2,g3,g4) - k(g1g2,g3,g4) + k(g1,g2g3,g4) - k(g1,g2,g3g4) + k(g1,g2,g3) == 0.
CocycleCheck verify_cocycle3(const Cocycle3& k);

// Shape and canonical-value checks plus the cocycle condition; throws
// ValidationError naming the witness quadruple.
Cocycle3 make_cocycle3(const GAction& action, std::vector<GroupElement> values);
Cochain2 make_cochain2(const GAction& action, std::vector<GroupElement> values);

// (du)(g1,g2,g3) = g1.u(g2,g3) - u(g1g2,g3) + u(g1,g2g3) - u(g1,g2).
std::vector<GroupElement> coboundary2_classical(const Cochain2& u);

std::string format_elems(std::span<const Elem> xs);

}  // namespace secoh

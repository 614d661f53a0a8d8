#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "secoh/abelian.hpp"
#include "secoh/group.hpp"
#include "secoh/homology.hpp"
#include "secoh/int_matrix.hpp"

namespace secoh {

inline constexpr std::uint64_t kDefaultCeiling = 1'000'000;

// abelian: Map(A^{n(n-1)/2}, B); triple: Map(G^n x A^{n(n-1)/2}, B) with
// twisted faces; classical: the bar complex Map(G^n, B).
enum class Variant { abelian, triple, classical };

std::string_view variant_name(Variant v);

std::size_t pair_count(int n);
// Lexicographic rank of (i, j), 0 <= i < j <= n-1. Throws std::out_of_range.
std::size_t pair_position(int i, int j, int n);

// A point of the degree-m tuple space. g has m entries unless the variant
// has no group part; a holds A element indices (enumeration order) in pair
// order unless the variant has no A part.
struct Tuple {
  int degree = 0;
  std::vector<Elem> g;
  std::vector<Elem> a;
  friend bool operator==(const Tuple&, const Tuple&) = default;
};

// Element-level face maps. Input has degree n+1, output degree n, 0 <= k <= n+1.
std::vector<GroupElement> face_plain(int n, int k, const FgAbGroup& a_group, std::span<const GroupElement> a);

struct TwistedFace {
  std::vector<Elem> g;
  std::vector<GroupElement> a;
};
// kappa.action is the action of G on A.
TwistedFace face_twisted(int n, int k, std::span<const Elem> g, std::span<const GroupElement> a, const Cocycle3& kappa);

std::vector<Elem> face_classical(int n, int k, const FiniteGroup& group, std::span<const Elem> g);

// Everything one complex depends on. Use the factories; they validate.
struct ComplexData {
  Variant variant = Variant::abelian;
  GAction action_a;  // G on A (trivial group for abelian, trivial module for classical)
  GAction action_b;  // G on B
  Cocycle3 kappa;

  static ComplexData abelian(const FgAbGroup& a, const FgAbGroup& b);
  static ComplexData triple(const GAction& action_a, const GAction& action_b, const Cocycle3& kappa);
  static ComplexData classical(const GAction& action_b);
};

using CochainFn = std::function<GroupElement(const Tuple&)>;

// Dense table over the tuple space in encoding order.
struct Cochain {
  int degree = 0;
  std::vector<GroupElement> values;
};

struct AssembledDelta {
  IntMatrix matrix;  // target ambient x source ambient
  PresentedGroup source;
  PresentedGroup target;
};

// D_cur D_prev must land in col(R_next).
struct ComplexSlice {
  int degree = 0;
  PresentedGroup r_prev, r_cur, r_next;
  IntMatrix d_prev, d_cur;

  bool composite_vanishes() const;
};

struct CohomologyRecord {
  FgAbGroup group;
  std::uint64_t source_rank = 0;  // ambient rank of C^n
  std::uint64_t target_rank = 0;  // ambient rank of C^{n+1}
};

class CochainComplex {
 public:
  explicit CochainComplex(ComplexData data);

  Variant variant() const noexcept { return data_.variant; }
  const ComplexData& data() const noexcept { return data_; }
  const FiniteGroup& group() const noexcept { return data_.action_b.group(); }
  const FgAbGroup& a() const noexcept { return data_.action_a.module(); }
  const FgAbGroup& b() const noexcept { return data_.action_b.module(); }
  bool has_group_part() const noexcept { return data_.variant != Variant::abelian; }
  bool has_a_part() const noexcept { return data_.variant != Variant::classical; }

  std::size_t a_order() const noexcept { return a_elems_.size(); }
  const GroupElement& a_element(Elem index) const { return a_elems_.at(index); }
  Elem a_index(const GroupElement& x) const;

  // Saturates at UINT64_MAX.
  std::uint64_t tuple_count(int m) const;
  std::uint64_t encode(const Tuple& t) const;
  Tuple decode(int m, std::uint64_t index) const;
  Tuple random_tuple(int m, std::mt19937_64& rng) const;
  // t has degree n+1.
  Tuple face(int n, int k, const Tuple& t) const;
  // Same, reusing the storage of out.
  void face_into(int n, int k, const Tuple& t, Tuple& out) const;

  GroupElement act_b(Elem g, const GroupElement& x) const { return data_.action_b.apply(g, x); }

  // Alternating sum over the n+2 faces of t (degree n+1); the k=0 term is
  // acted on by g_1 when the variant has a group part.
  GroupElement eval_delta(int n, const CochainFn& f, const Tuple& t) const;

  // Throws ScaleError when the target ambient rank exceeds the ceiling.
  AssembledDelta assemble_delta(int n, std::uint64_t ceiling = kDefaultCeiling) const;
  PresentedGroup presentation(int m) const;
  ComplexSlice slice(int n, std::uint64_t ceiling = kDefaultCeiling) const;
  CohomologyRecord cohomology(int n, std::uint64_t ceiling = kDefaultCeiling, const HomologyOptions& opts = {}) const;

  Cochain tabulate(int n, const CochainFn& f) const;
  CochainFn as_function(const Cochain& c) const;
  // Deterministic pseudo-random function of the tuple; never tabulated.
  CochainFn random_function(std::uint64_t seed) const;
  Cochain random_cochain(int n, std::mt19937_64& rng) const;
  // Concatenated generator coordinates, the source vector of the lifted matrix.
  std::vector<Integer> coefficients(const Cochain& c) const;
  Cochain from_coefficients(int n, std::span<const Integer> v) const;

 private:
  void check_scale(int m, std::uint64_t ceiling) const;
  Elem g_at(const Tuple& t, int i) const;  // 1-based, identity without a group part

  ComplexData data_;
  std::vector<GroupElement> a_elems_;
  std::vector<Elem> a_add_, a_neg_, a_act_, kappa_idx_, identity_g_;
};

// Uniform on finite factors, [-bound, bound] on free factors.
GroupElement random_element(const FgAbGroup& g, std::mt19937_64& rng, std::int64_t bound = 10);

FgAbGroup secondary_cohomology_abelian(const FgAbGroup& a, const FgAbGroup& b, int n,
                                       std::uint64_t ceiling = kDefaultCeiling);
FgAbGroup secondary_cohomology_triple(const GAction& action_a, const GAction& action_b, const Cocycle3& kappa, int n,
                                      std::uint64_t ceiling = kDefaultCeiling);
FgAbGroup classical_cohomology(const GAction& action_b, int n, std::uint64_t ceiling = kDefaultCeiling);

}  // namespace secoh

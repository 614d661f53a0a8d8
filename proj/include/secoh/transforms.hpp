#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "secoh/complexes.hpp"
#include "secoh/group.hpp"

namespace secoh {

// kappa = kappa_prime + d2(u), checked entrywise.
struct PhiContext {
  Cocycle3 kappa;
  Cocycle3 kappa_prime;
  Cochain2 u;

  // Throws ValidationError when the relation fails or the data disagree.
  static PhiContext make(const Cocycle3& kappa, const Cocycle3& kappa_prime, const Cochain2& u);
  // kappa_prime := kappa - d2(u).
  static PhiContext from_u(const Cocycle3& kappa, const Cochain2& u);
};

// Which u-argument corrects a_{i,j}:
//   shifted: u(g_{i+1}...g_j, g_{j+1})    (a chain map; the default)
//   literal: u(g_{i+1}...g_{j-1}, g_j)    (kept to show it is not one)
enum class PhiIndex { shifted, literal };

Cochain2 add_cochains(const Cochain2& u, const Cochain2& v);
Cochain2 negate_cochain(const Cochain2& u);

// (g; a) -> (g; c) with c_{i,j} = a_{i,j} + u(...) on a triple-variant tuple.
Tuple phi_substitute(const CochainComplex& c, const Cochain2& u, const Tuple& t, PhiIndex index = PhiIndex::shifted);

// Phi_u(f)(g; a) = f(g; c). f lives over kappa, the result over kappa_prime.
CochainFn phi_u(const CochainComplex& c, const Cochain2& u, CochainFn f, PhiIndex index = PhiIndex::shifted);
Cochain phi_u(const PhiContext& ctx, const CochainComplex& source, const Cochain& f);

// iota(f)(g; a) = f(g); rho(F)(a) = F(e, ..., e; a).
CochainFn iota(CochainFn f);
CochainFn rho(const CochainComplex& triple, CochainFn big_f);
Cochain iota(const CochainComplex& classical, const CochainComplex& triple, const Cochain& f);
Cochain rho(const CochainComplex& triple, const CochainComplex& plain, const Cochain& big_f);

// Outcome of a pointwise identity test.
struct PointCheck {
  bool pass = true;
  std::size_t checked = 0;
  std::optional<Tuple> witness;
};

// d(d f) == 0 at random degree-(n+2) tuples; f is a lazily evaluated random function.
PointCheck check_delta_squared(const CochainComplex& c, int n, std::size_t samples, std::mt19937_64& rng);
// Matrix of d_n applied to a random cochain equals pointwise evaluation at every tuple.
PointCheck check_matrix_matches_pointwise(const CochainComplex& c, int n, std::mt19937_64& rng,
                                          std::uint64_t ceiling = kDefaultCeiling);
// d_{n-1}^k d_n^l == d_{n-1}^{l-1} d_n^k for k < l at every degree-(n+1) tuple
// (exhaustive) or at `samples` random ones when samples > 0.
PointCheck check_simplicial_identity(const CochainComplex& c, int n, std::size_t samples, std::mt19937_64& rng);
// d^{kappa'} Phi_u f == Phi_u d^{kappa} f at random degree-(n+1) tuples, f of degree n.
PointCheck check_phi_chain_map(const CochainComplex& source, const CochainComplex& target, const Cochain2& u, int n,
                               std::size_t samples, std::mt19937_64& rng, PhiIndex index = PhiIndex::shifted);
// Phi_u Phi_v f == Phi_{u+v} f at random degree-n tuples.
PointCheck check_phi_composition(const CochainComplex& c, const Cochain2& u, const Cochain2& v, int n,
                                 std::size_t samples, std::mt19937_64& rng);
// d^kappa (iota f) == iota (d f).
PointCheck check_iota_chain_map(const CochainComplex& classical, const CochainComplex& triple, int n,
                                std::size_t samples, std::mt19937_64& rng);
// d (rho F) == rho (d^kappa F).
PointCheck check_rho_chain_map(const CochainComplex& triple, const CochainComplex& plain, int n, std::size_t samples,
                               std::mt19937_64& rng);

// Whether ker rho == im iota holds in degree n. Recorded, never asserted.
struct ExactnessObservation {
  int degree = 0;
  bool evaluated = false;  // false when the tuple space is too large to inspect
  bool image_in_kernel = false;
  bool kernel_in_image = false;
};
ExactnessObservation observe_exactness(const CochainComplex& triple, int n, std::uint64_t limit = 4096);

// f(f(a01,a02,a12),a03,a13) == f(a01, f(a02,a03,a23), f(a12,a13,a23)) with
// f(a,b,c) = a b c^{-1}.
struct TernaryResult {
  bool holds = true;
  std::uint64_t checked = 0;
  std::optional<std::array<Elem, 6>> witness;  // (a01, a02, a03, a12, a13, a23)
};
// samples == 0 means exhaustive.
TernaryResult ternary_check(const FiniteGroup& g, std::uint64_t samples = 0, std::uint64_t seed = 1);
TernaryResult ternary_check(const FgAbGroup& a, std::uint64_t samples = 0, std::uint64_t seed = 1);

}  // namespace secoh

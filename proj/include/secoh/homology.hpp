#pragma once

#include "secoh/abelian.hpp"
#include "secoh/int_matrix.hpp"
#include "secoh/snf.hpp"

namespace secoh {

struct HomologyOptions {
  // Diagonal relation matrices unlock row compression, the prime-field
  // kernel and residue-class cokernels. Disabling them forces the plain
  // block-kernel route on the full matrices (used to cross-check).
  bool fast_paths = true;
};

// True when every column of m lies in col(relations).
bool maps_into_relations(const IntMatrix& m, const IntMatrix& relations);

// Z = {x : D x in col(R)} as an echelon basis.
EchelonLattice relative_kernel(const IntMatrix& d, const IntMatrix& r, const HomologyOptions& opts = {});

// Homology at the middle term of C'' -> C -> C' where C = Z^m / col(r_cur),
// C' is presented by r_next, and d_prev, d_cur are integer lifts of the maps.
//
//   1. Z = {x : d_cur x in col(r_next)}: kernel of [d_cur | r_next], x-parts.
//   2. W = coordinates in Z of every column of [d_prev | r_cur].
//   3. result = cokernel_invariants(W).
//
// Throws ComplexError when d_cur * r_cur is not inside col(r_next) or when
// d_prev does not land in Z; std::invalid_argument on shape mismatch.
FgAbGroup homology_at(const IntMatrix& r_cur, const IntMatrix& d_prev, const IntMatrix& d_cur,
                      const IntMatrix& r_next, const HomologyOptions& opts = {});

}  // namespace secoh

#pragma once

#include <cstdint>
#include <functional>

#include "secoh/complexes.hpp"

namespace secoh {

// Exhaustive enumeration refuses cochain groups with more elements than this.
inline constexpr std::uint64_t kOracleLimit = std::uint64_t{1} << 16;

// |C^n| = |B|^{N_n}. Throws ValidationError for infinite B and ScaleError
// beyond kOracleLimit.
std::uint64_t cochain_group_order(const CochainComplex& c, int n);

// Every function from the degree-n tuple space to B, each exactly once.
void enumerate_cochains(const CochainComplex& c, int n, const std::function<void(const Cochain&)>& visit);

struct BruteSummary {
  std::uint64_t cochains = 0;      // |C^n|
  std::uint64_t cocycles = 0;      // |Z^n|
  std::uint64_t coboundaries = 0;  // |B^n| = |im d_{n-1}|
  std::uint64_t image_next = 0;    // |im d_n|
  std::uint64_t order = 0;         // |H^n|
  std::uint64_t exponent = 0;      // exponent of H^n
};

// Independent of matrix assembly and SNF: cocycles by pointwise filtering,
// coboundaries by mapping every degree-(n-1) cochain, quotient by coset
// counting, exponent by element orders in the quotient.
BruteSummary brute_cohomology_summary(const CochainComplex& c, int n);

}  // namespace secoh

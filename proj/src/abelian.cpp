#include "secoh/abelian.hpp"

#include <algorithm>
#include <stdexcept>

#include "secoh/snf.hpp"

namespace secoh {

std::vector<Integer> canonical_invariants(std::vector<Integer> cyclic_orders) {
  std::vector<Integer> torsion;
  std::size_t free = 0;
  for (auto& d : cyclic_orders) {
    Integer a = abs(d);
    if (a.is_zero()) {
      ++free;
    } else if (!a.is_one()) {
      torsion.push_back(std::move(a));
    }
  }
  // (a, b) -> (gcd, lcm) sweeps leave a divisibility chain.
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t j = i + 1; j < torsion.size(); ++j) {
      Integer g = gcd(torsion[i], torsion[j]);
      Integer l = torsion[i] / g * torsion[j];
      torsion[i] = std::move(g);
      torsion[j] = std::move(l);
    }
  }
  std::vector<Integer> out;
  for (auto& t : torsion) {
    if (!t.is_one()) out.push_back(std::move(t));
  }
  out.insert(out.end(), free, Integer(0));
  return out;
}

FgAbGroup::FgAbGroup(std::vector<Integer> invariants) : invariants_(std::move(invariants)) {
  bool seen_zero = false;
  const Integer* prev = nullptr;
  for (const auto& d : invariants_) {
    if (d.sign() < 0) throw std::invalid_argument("invariant factors must be non-negative");
    if (d.is_one()) throw std::invalid_argument("invariant factor 1 is not allowed");
    if (d.is_zero()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) throw std::invalid_argument("free factors (0) must come last");
    if (prev && !divides(*prev, d)) {
      throw std::invalid_argument("invariant factors must form a divisibility chain: " + prev->str() +
                                  " does not divide " + d.str());
    }
    prev = &d;
  }
}

FgAbGroup FgAbGroup::from_orders(std::vector<Integer> cyclic_orders) {
  return FgAbGroup(canonical_invariants(std::move(cyclic_orders)));
}

FgAbGroup FgAbGroup::cyclic(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("cyclic group order must be non-negative");
  if (n == 1) return FgAbGroup();
  return FgAbGroup({Integer(n)});
}

FgAbGroup FgAbGroup::free(std::size_t rank) { return FgAbGroup(std::vector<Integer>(rank)); }

std::size_t FgAbGroup::free_rank() const noexcept {
  return static_cast<std::size_t>(std::count_if(invariants_.begin(), invariants_.end(),
                                                [](const Integer& d) { return d.is_zero(); }));
}

std::vector<Integer> FgAbGroup::torsion() const {
  std::vector<Integer> t;
  for (const auto& d : invariants_) {
    if (!d.is_zero()) t.push_back(d);
  }
  return t;
}

Integer FgAbGroup::order() const {
  if (!is_finite()) throw std::domain_error("order of an infinite group");
  Integer n(1);
  for (const auto& d : invariants_) n *= d;
  return n;
}

Integer FgAbGroup::exponent() const {
  if (!is_finite()) return Integer(0);
  return invariants_.empty() ? Integer(1) : invariants_.back();
}

GroupElement FgAbGroup::reduce(GroupElement x) const {
  if (x.coeffs.size() != rank()) throw std::invalid_argument("element has wrong number of coordinates");
  for (std::size_t t = 0; t < rank(); ++t) {
    if (!invariants_[t].is_zero()) x.coeffs[t] = mod_floor(x.coeffs[t], invariants_[t]);
  }
  return x;
}

GroupElement FgAbGroup::add(const GroupElement& x, const GroupElement& y) const {
  GroupElement r = x;
  if (y.coeffs.size() != r.coeffs.size()) throw std::invalid_argument("element rank mismatch");
  for (std::size_t t = 0; t < r.coeffs.size(); ++t) r.coeffs[t] += y.coeffs[t];
  return reduce(std::move(r));
}

GroupElement FgAbGroup::sub(const GroupElement& x, const GroupElement& y) const {
  GroupElement r = x;
  if (y.coeffs.size() != r.coeffs.size()) throw std::invalid_argument("element rank mismatch");
  for (std::size_t t = 0; t < r.coeffs.size(); ++t) r.coeffs[t] -= y.coeffs[t];
  return reduce(std::move(r));
}

GroupElement FgAbGroup::neg(const GroupElement& x) const {
  GroupElement r = x;
  for (auto& c : r.coeffs) c = -c;
  return reduce(std::move(r));
}

bool FgAbGroup::is_canonical(const GroupElement& x) const {
  if (x.coeffs.size() != rank()) return false;
  for (std::size_t t = 0; t < rank(); ++t) {
    const auto& d = invariants_[t];
    if (!d.is_zero() && (x.coeffs[t].sign() < 0 || x.coeffs[t] >= d)) return false;
  }
  return true;
}

std::uint64_t FgAbGroup::element_count() const {
  if (!is_finite()) throw std::domain_error("cannot enumerate an infinite group");
  Integer n = order();
  if (!n.fits_int64()) throw std::overflow_error("group too large to enumerate");
  return static_cast<std::uint64_t>(n.to_int64());
}

std::uint64_t FgAbGroup::index_of(const GroupElement& x) const {
  if (!is_canonical(x)) throw std::invalid_argument("element is not in canonical form");
  element_count();
  std::uint64_t idx = 0;
  for (std::size_t t = 0; t < rank(); ++t) {
    idx = idx * static_cast<std::uint64_t>(invariants_[t].to_int64()) +
          static_cast<std::uint64_t>(x.coeffs[t].to_int64());
  }
  return idx;
}

GroupElement FgAbGroup::element(std::uint64_t index) const {
  std::uint64_t n = element_count();
  if (index >= n) throw std::out_of_range("element index out of range");
  GroupElement x = zero();
  for (std::size_t t = rank(); t-- > 0;) {
    auto d = static_cast<std::uint64_t>(invariants_[t].to_int64());
    x.coeffs[t] = Integer(index % d);
    index /= d;
  }
  return x;
}

IntMatrix FgAbGroup::relations() const { return IntMatrix::diagonal(rank(), rank(), invariants_); }

std::string FgAbGroup::str() const {
  if (invariants_.empty()) return "0";
  std::string s;
  for (std::size_t t = 0; t < invariants_.size(); ++t) {
    if (t) s += " + ";
    s += invariants_[t].is_zero() ? std::string("Z") : "Z" + invariants_[t].str();
  }
  return s;
}

PresentedGroup PresentedGroup::make(std::size_t ambient_rank, IntMatrix relations) {
  if (relations.rows() != ambient_rank) {
    throw std::invalid_argument("relation matrix must have one row per ambient generator");
  }
  return PresentedGroup{ambient_rank, std::move(relations)};
}

PresentedGroup PresentedGroup::power(const FgAbGroup& b, std::size_t copies) {
  std::size_t r = b.rank();
  std::vector<Integer> d;
  d.reserve(r * copies);
  for (std::size_t c = 0; c < copies; ++c) d.insert(d.end(), b.invariants().begin(), b.invariants().end());
  return PresentedGroup{r * copies, IntMatrix::diagonal(r * copies, r * copies, d)};
}

FgAbGroup PresentedGroup::canonical() const { return cokernel_invariants(relations); }

}  // namespace secoh

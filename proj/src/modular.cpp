#include "modular.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace secoh::detail {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::logic_error("residue is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

struct SmallXgcd {
  std::int64_t g, s, t;
};

SmallXgcd small_xgcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

std::uint64_t reduce_signed(std::int64_t v, std::int64_t e) {
  v %= e;
  if (v < 0) v += e;
  return static_cast<std::uint64_t>(v);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool usable_modulus(const Integer& m) {
  return m.sign() > 0 && m.fits_int64() && static_cast<std::uint64_t>(m.to_int64()) <= kMaxModulus;
}

std::uint64_t residue(const Integer& v, std::uint64_t m) {
  if (v.is_small()) {
    std::int64_t r = v.to_int64() % static_cast<std::int64_t>(m);
    if (r < 0) r += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(r);
  }
  return static_cast<std::uint64_t>(mod_floor(v, Integer(m)).to_int64());
}

PrimeRref::PrimeRref(std::size_t cols, std::uint64_t p)
    : cols_(cols), p_(p), pivot_row_(cols, -1), free_(cols), work_(cols, 0) {
  if (!is_prime(p) || p > kMaxModulus) throw std::invalid_argument("PrimeRref needs a prime below 2^31");
  std::iota(free_.begin(), free_.end(), std::size_t{0});
}

bool PrimeRref::insert(std::span<const std::pair<std::size_t, std::uint64_t>> row) {
  auto& w = work_;
  for (const auto& [c, v] : row) {
    if (c >= cols_) throw std::out_of_range("row entry outside column range");
    w[c] = (w[c] + v % p_) % p_;
  }
  // Clear pivot columns present in the input; the pivot rows only add
  // mass in free columns, so one pass suffices.
  for (const auto& [c, v] : row) {
    (void)v;
    std::ptrdiff_t k = pivot_row_[c];
    if (k < 0 || w[c] == 0) continue;
    const std::uint64_t f = w[c];
    const auto& pr = rows_[static_cast<std::size_t>(k)];
    for (std::size_t fc : free_) {
      if (pr[fc] != 0) w[fc] = (w[fc] + (p_ - pr[fc]) * f) % p_;
    }
    w[c] = 0;
  }
  std::size_t lead = cols_;
  for (std::size_t fc : free_) {
    if (w[fc] != 0) {
      lead = fc;
      break;
    }
  }
  if (lead == cols_) {
    for (std::size_t fc : free_) w[fc] = 0;
    for (const auto& [c, v] : row) {
      (void)v;
      w[c] = 0;
    }
    return false;
  }

  std::vector<std::uint64_t> fresh(cols_, 0);
  const std::uint64_t inv = inverse_mod(w[lead], p_);
  for (std::size_t fc : free_) {
    if (w[fc] != 0) fresh[fc] = w[fc] * inv % p_;
    w[fc] = 0;
  }
  for (const auto& [c, v] : row) {
    (void)v;
    w[c] = 0;
  }
  free_.erase(std::find(free_.begin(), free_.end(), lead));
  for (auto& pr : rows_) {
    const std::uint64_t f = pr[lead];
    if (f == 0) continue;
    for (std::size_t fc : free_) {
      if (fresh[fc] != 0) pr[fc] = (pr[fc] + (p_ - fresh[fc]) * f) % p_;
    }
    pr[lead] = 0;
  }
  pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  pivot_col_.push_back(lead);
  rows_.push_back(std::move(fresh));
  return true;
}

std::vector<Integer> cokernel_orders_mod(std::size_t rows, const std::vector<std::vector<IntMatrix::Entry>>& columns,
                                         std::uint64_t e) {
  if (e == 0 || e > kMaxModulus) throw std::invalid_argument("modulus out of range");
  std::vector<Integer> orders;
  if (e == 1) return orders;

  if (is_prime(e)) {
    PrimeRref rref(rows, e);
    std::vector<std::pair<std::size_t, std::uint64_t>> buf;
    for (const auto& col : columns) {
      buf.clear();
      for (const auto& en : col) {
        std::uint64_t r = residue(en.value, e);
        if (r) buf.emplace_back(en.col, r);
      }
      if (!buf.empty()) rref.insert(buf);
      if (rref.rank() == rows) break;
    }
    orders.assign(rows - rref.rank(), Integer(e));
    return orders;
  }

  // Diagonalize over Z/e with determinant-one 2x2 combinations.
  const std::size_t m = rows, n = columns.size();
  const auto E = static_cast<std::int64_t>(e);
  std::vector<std::int64_t> a(m * n, 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * n + j]; };
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& en : columns[j]) at(en.col, j) = static_cast<std::int64_t>(residue(en.value, e));
  }
  auto gcd_e = [&](std::int64_t v) { return std::gcd(v, E); };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::size_t pi = m, pj = n;
    std::int64_t best = E;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (at(i, j) != 0 && gcd_e(at(i, j)) < best) {
          best = gcd_e(at(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    if (pi != t) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(t, j), at(pi, j));
    }
    if (pj != t) {
      for (std::size_t i = 0; i < m; ++i) std::swap(at(i, t), at(i, pj));
    }
    // Row pass clears column t, column pass clears row t; repeat until the
    // column pass leaves column t clear (the pivot then divides everything).
    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (at(i, t) == 0) continue;
        auto [g, s, u] = small_xgcd(at(t, t), at(i, t));
        std::int64_t x = at(t, t) / g, y = at(i, t) / g;
        for (std::size_t j = t; j < n; ++j) {
          std::int64_t rt = at(t, j), ri = at(i, j);
          at(t, j) = static_cast<std::int64_t>(reduce_signed((s % E) * rt % E + (u % E) * ri % E, E));
          at(i, j) = static_cast<std::int64_t>(reduce_signed(y * rt % E - x * ri % E, E));
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (at(t, j) == 0) continue;
        auto [g, s, u] = small_xgcd(at(t, t), at(t, j));
        std::int64_t x = at(t, t) / g, y = at(t, j) / g;
        for (std::size_t i = t; i < m; ++i) {
          std::int64_t ct = at(i, t), cj = at(i, j);
          at(i, t) = static_cast<std::int64_t>(reduce_signed((s % E) * ct % E + (u % E) * cj % E, E));
          at(i, j) = static_cast<std::int64_t>(reduce_signed(y * ct % E - x * cj % E, E));
        }
      }
      bool clear = true;
      for (std::size_t i = t + 1; i < m && clear; ++i) clear = at(i, t) == 0;
      if (clear) break;
    }
    orders.emplace_back(gcd_e(at(t, t)));
  }
  for (std::size_t i = t; i < m; ++i) orders.emplace_back(E);
  return orders;
}

}  // namespace secoh::detail

#include "secoh/snf.hpp"

#include <algorithm>
#include <stdexcept>

#include "dense.hpp"

namespace secoh {

namespace {

using detail::Dense;

// Elimination state. Invariant at step t: rows >= t are zero in columns < t
// and rows < t are zero in columns >= t, so A-updates start at column/row t.
struct SnfWork {
  Dense A;
  Dense U;
  Dense V;
  bool track_u;
  bool track_v;

  SnfWork(const IntMatrix& m, bool tu, bool tv)
      : A(Dense::from(m)),
        U(tu ? Dense::identity(m.rows()) : Dense()),
        V(tv ? Dense::identity(m.cols()) : Dense()),
        track_u(tu),
        track_v(tv) {}

  void swap_rows(std::size_t i, std::size_t k) {
    A.swap_rows(i, k);
    if (track_u) U.swap_rows(i, k);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    A.swap_cols(j, k);
    if (track_v) V.swap_cols(j, k);
  }
  // row_i -= q * row_t
  void row_submul(std::size_t i, const Integer& q, std::size_t t) {
    for (std::size_t j = t; j < A.cols; ++j) {
      if (!A(t, j).is_zero()) A(i, j).submul(q, A(t, j));
    }
    if (track_u) {
      for (std::size_t j = 0; j < U.cols; ++j) {
        if (!U(t, j).is_zero()) U(i, j).submul(q, U(t, j));
      }
    }
  }
  // col_j -= q * col_t
  void col_submul(std::size_t j, const Integer& q, std::size_t t) {
    for (std::size_t i = t; i < A.rows; ++i) {
      if (!A(i, t).is_zero()) A(i, j).submul(q, A(i, t));
    }
    if (track_v) {
      for (std::size_t i = 0; i < V.rows; ++i) {
        if (!V(i, t).is_zero()) V(i, j).submul(q, V(i, t));
      }
    }
  }
  // row_t += row_i
  void row_add(std::size_t t, std::size_t i) {
    for (std::size_t j = t; j < A.cols; ++j) A(t, j) += A(i, j);
    if (track_u) {
      for (std::size_t j = 0; j < U.cols; ++j) U(t, j) += U(i, j);
    }
  }
  void negate_row(std::size_t t) {
    for (std::size_t j = t; j < A.cols; ++j) A(t, j) = -A(t, j);
    if (track_u) {
      for (std::size_t j = 0; j < U.cols; ++j) U(t, j) = -U(t, j);
    }
  }

  void run() {
    const std::size_t m = A.rows, n = A.cols;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      // Smallest magnitude in the remaining block; row-major scan with strict
      // comparison keeps the lowest (row, col) on ties.
      bool found = false;
      std::size_t pi = 0, pj = 0;
      Integer best;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          const Integer& v = A(i, j);
          if (v.is_zero()) continue;
          Integer av = abs(v);
          if (!found || av < best) {
            found = true;
            best = std::move(av);
            pi = i;
            pj = j;
          }
        }
      }
      if (!found) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (A(i, t).is_zero()) continue;
          Integer q = A(i, t) / A(t, t);
          if (!q.is_zero()) row_submul(i, q, t);
          if (!A(i, t).is_zero()) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (A(t, j).is_zero()) continue;
          Integer q = A(t, j) / A(t, t);
          if (!q.is_zero()) col_submul(j, q, t);
          if (!A(t, j).is_zero()) clean = false;
        }
        if (!clean) {
          // A remainder survived: move the smallest entry of row/col t to the pivot.
          std::size_t bi = t, bj = t;
          Integer b = abs(A(t, t));
          for (std::size_t i = t + 1; i < m; ++i) {
            if (!A(i, t).is_zero() && abs(A(i, t)) < b) {
              b = abs(A(i, t));
              bi = i;
              bj = t;
            }
          }
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!A(t, j).is_zero() && abs(A(t, j)) < b) {
              b = abs(A(t, j));
              bi = t;
              bj = j;
            }
          }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        // Divisibility: fold in the first row whose block entry the pivot does not divide.
        std::size_t bad_row = m;
        for (std::size_t i = t + 1; i < m && bad_row == m; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (!A(i, j).is_zero() && !divides(A(t, t), A(i, j))) {
              bad_row = i;
              break;
            }
          }
        }
        if (bad_row == m) break;
        row_add(t, bad_row);
      }
      if (A(t, t).sign() < 0) negate_row(t);
    }
  }
};

std::size_t diag_rank(const IntMatrix& s) {
  std::size_t r = 0;
  for (const auto& d : s.diagonal_entries()) {
    if (!d.is_zero()) ++r;
  }
  return r;
}

}  // namespace

std::size_t SnfResult::rank() const { return diag_rank(S); }

SnfResult snf(const IntMatrix& m) {
  SnfWork w(m, true, true);
  w.run();
  return SnfResult{w.U.to_matrix(), w.A.to_matrix(), w.V.to_matrix()};
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SnfWork w(m, false, true);
  w.run();
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    if (!w.A(i, i).is_zero()) ++r;
  }
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = r; j < m.cols(); ++j) {
      if (!w.V(i, j).is_zero()) k.set(i, j - r, w.V(i, j));
    }
  }
  return k;
}

FgAbGroup cokernel_invariants(const IntMatrix& m) {
  SnfWork w(m, false, false);
  w.run();
  std::vector<Integer> orders;
  std::size_t k = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < k; ++i) orders.push_back(w.A(i, i));
  for (std::size_t i = k; i < m.rows(); ++i) orders.emplace_back(0);
  return FgAbGroup::from_orders(std::move(orders));
}

MembershipSolver::MembershipSolver(const IntMatrix& m) : rows_(m.rows()), snf_(snf(m)) {
  diag_ = snf_.diagonal();
  rank_ = snf_.rank();
}

std::optional<std::vector<Integer>> MembershipSolver::solve(std::span<const Integer> v) const {
  if (v.size() != rows_) throw std::invalid_argument("solve_membership: vector length does not match rows");
  std::vector<Integer> w = snf_.U.apply(v);
  std::vector<Integer> y(snf_.V.rows());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < rank_) {
      if (!divides(diag_[i], w[i])) return std::nullopt;
      y[i] = w[i] / diag_[i];
    } else if (!w[i].is_zero()) {
      return std::nullopt;
    }
  }
  return snf_.V.apply(y);
}

std::optional<std::vector<Integer>> solve_membership(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.rows()) throw std::invalid_argument("solve_membership: vector length does not match rows");
  return MembershipSolver(m).solve(v);
}

EchelonLattice EchelonLattice::from_generators(std::size_t ambient, std::vector<std::vector<Integer>> gens) {
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].size() != ambient) throw std::invalid_argument("generator length does not match ambient rank");
    if (std::any_of(gens[k].begin(), gens[k].end(), [](const Integer& x) { return !x.is_zero(); })) {
      active.push_back(k);
    }
  }
  EchelonLattice lat(ambient);
  std::vector<std::pair<std::size_t, std::size_t>> found;  // (pivot row, generator)
  for (std::size_t i = ambient; i-- > 0 && !active.empty();) {
    for (;;) {
      std::vector<std::size_t> hit;
      for (std::size_t k : active) {
        if (!gens[k][i].is_zero()) hit.push_back(k);
      }
      if (hit.empty()) break;
      std::size_t p = hit[0];
      for (std::size_t k : hit) {
        if (abs(gens[k][i]) < abs(gens[p][i])) p = k;
      }
      if (hit.size() == 1) {
        found.emplace_back(i, p);
        active.erase(std::find(active.begin(), active.end(), p));
        break;
      }
      for (std::size_t k : hit) {
        if (k == p) continue;
        Integer q = gens[k][i] / gens[p][i];
        for (std::size_t r = 0; r <= i; ++r) {
          if (!gens[p][r].is_zero()) gens[k][r].submul(q, gens[p][r]);
        }
      }
      active.erase(std::remove_if(active.begin(), active.end(),
                                  [&](std::size_t k) {
                                    return std::all_of(gens[k].begin(), gens[k].begin() + static_cast<long>(i) + 1,
                                                       [](const Integer& x) { return x.is_zero(); });
                                  }),
                   active.end());
    }
  }
  std::reverse(found.begin(), found.end());
  for (const auto& [row, k] : found) {
    SparseColumn col;
    for (std::size_t r = 0; r <= row; ++r) {
      if (!gens[k][r].is_zero()) col.push_back({r, gens[k][r]});
    }
    lat.basis_.push_back(std::move(col));
    lat.pivots_.push_back(row);
  }
  return lat;
}

EchelonLattice EchelonLattice::from_echelon(std::size_t ambient, std::vector<SparseColumn> basis) {
  EchelonLattice lat(ambient);
  for (auto& col : basis) {
    if (col.empty()) throw std::invalid_argument("echelon basis contains a zero vector");
    std::sort(col.begin(), col.end(), [](const IntMatrix::Entry& a, const IntMatrix::Entry& b) { return a.col < b.col; });
    std::size_t piv = col.back().col;
    if (piv >= ambient) throw std::invalid_argument("echelon basis entry outside ambient rank");
    if (!lat.pivots_.empty() && piv <= lat.pivots_.back()) {
      throw std::invalid_argument("echelon basis pivots must strictly increase");
    }
    lat.pivots_.push_back(piv);
    lat.basis_.push_back(std::move(col));
  }
  return lat;
}

IntMatrix EchelonLattice::matrix() const {
  IntMatrix m(ambient_, basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    for (const auto& e : basis_[j]) m.set(e.col, j, e.value);
  }
  return m;
}

std::optional<std::vector<Integer>> EchelonLattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("coordinates: vector length does not match ambient rank");
  std::vector<Integer> res(v.begin(), v.end());
  std::vector<Integer> y(basis_.size());
  std::size_t top = ambient_;  // rows >= top are already known to vanish
  for (std::size_t j = basis_.size(); j-- > 0;) {
    const std::size_t piv = pivots_[j];
    for (std::size_t r = top; r-- > piv + 1;) {
      if (!res[r].is_zero()) return std::nullopt;
    }
    const Integer& b = basis_[j].back().value;
    if (!res[piv].is_zero()) {
      if (!divides(b, res[piv])) return std::nullopt;
      Integer q = res[piv] / b;
      for (const auto& e : basis_[j]) res[e.col].submul(q, e.value);
      y[j] = std::move(q);
    }
    top = piv;
  }
  for (std::size_t r = 0; r < top; ++r) {
    if (!res[r].is_zero()) return std::nullopt;
  }
  return y;
}

}  // namespace secoh

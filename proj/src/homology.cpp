#include "secoh/homology.hpp"

#include <map>
#include <stdexcept>

#include "modular.hpp"
#include "secoh/errors.hpp"

namespace secoh {

namespace {

// Modulus attached to row i of a diagonal relation matrix (0 = exact).
Integer row_modulus(const IntMatrix& r, std::size_t i) {
  if (i >= r.cols()) return Integer(0);
  return abs(r.at(i, i));
}

std::vector<Integer> dense_row(const IntMatrix& m, std::size_t i) {
  std::vector<Integer> v(m.cols());
  for (const auto& e : m.row(i)) v[e.col] = e.value;
  return v;
}

// Generating set, in echelon shape, of rowspan(rows) (+ mu Z^n when mu > 0).
class RowCompressor {
 public:
  RowCompressor(std::size_t cols, Integer mu) : cols_(cols), mu_(std::move(mu)) {}

  void insert(std::vector<Integer> v) {
    reduce(v);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c].is_zero()) continue;
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        pivots_.emplace(c, std::move(v));
        return;
      }
      auto& p = it->second;
      if (divides(p[c], v[c])) {
        Integer q = v[c] / p[c];
        for (std::size_t j = c; j < cols_; ++j) {
          if (!p[j].is_zero()) v[j].submul(q, p[j]);
        }
      } else {
        // [[s, t], [b/g, -a/g]] has determinant -1.
        auto [g, s, t] = xgcd(p[c], v[c]);
        Integer x = p[c] / g, y = v[c] / g;
        for (std::size_t j = c; j < cols_; ++j) {
          Integer np = s * p[j];
          np.addmul(t, v[j]);
          Integer nv = y * p[j];
          nv.submul(x, v[j]);
          p[j] = std::move(np);
          v[j] = std::move(nv);
        }
        reduce(p);
      }
      reduce(v);
    }
  }

  std::vector<std::vector<Integer>> rows() const {
    std::vector<std::vector<Integer>> out;
    for (const auto& [c, r] : pivots_) out.push_back(r);
    return out;
  }

 private:
  void reduce(std::vector<Integer>& v) const {
    if (mu_.is_zero()) return;
    for (auto& x : v) {
      if (!x.is_zero()) x = mod_floor(x, mu_);
    }
  }

  std::size_t cols_;
  Integer mu_;
  std::map<std::size_t, std::vector<Integer>> pivots_;
};

EchelonLattice x_parts_lattice(const IntMatrix& kernel, std::size_t m) {
  std::vector<std::vector<Integer>> gens;
  gens.reserve(kernel.cols());
  for (auto& col : kernel.columns()) {
    col.resize(m);
    gens.push_back(std::move(col));
  }
  return EchelonLattice::from_generators(m, std::move(gens));
}

EchelonLattice block_kernel_route(const IntMatrix& d, const IntMatrix& r) {
  return x_parts_lattice(kernel_basis(IntMatrix::hstack(d, r)), d.cols());
}

// {x : H x = 0 mod p} from a fully reduced echelon form. Pivot column c gets
// p e_c; free column c gets e_c - sum_k H[k][c] e_{pivot(k)}. Both have their
// lowest nonzero at row c, so the basis is already in echelon shape.
EchelonLattice prime_kernel(const detail::PrimeRref& rref) {
  const std::size_t m = rref.cols();
  const auto p = static_cast<std::int64_t>(rref.modulus());
  std::vector<EchelonLattice::SparseColumn> basis(m);
  for (std::size_t c = 0; c < m; ++c) {
    if (rref.row_of_pivot(c) >= 0) {
      basis[c].push_back({c, Integer(p)});
      continue;
    }
    for (std::size_t k = 0; k < rref.rank(); ++k) {
      std::uint64_t h = rref.row(k)[c];
      if (h != 0) basis[c].push_back({rref.pivot_column(k), Integer(p - static_cast<std::int64_t>(h))});
    }
    basis[c].push_back({c, Integer(1)});
  }
  return EchelonLattice::from_echelon(m, std::move(basis));
}

}  // namespace

bool maps_into_relations(const IntMatrix& m, const IntMatrix& relations) {
  if (m.rows() != relations.rows()) throw std::invalid_argument("maps_into_relations: row counts differ");
  if (relations.is_diagonal()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer mu = row_modulus(relations, i);
      for (const auto& e : m.row(i)) {
        if (!divides(mu, e.value)) return false;
      }
    }
    return true;
  }
  MembershipSolver solver(relations);
  for (const auto& col : m.columns()) {
    if (!solver.contains(col)) return false;
  }
  return true;
}

EchelonLattice relative_kernel(const IntMatrix& d, const IntMatrix& r, const HomologyOptions& opts) {
  if (d.rows() != r.rows()) throw std::invalid_argument("relative_kernel: D and R must have the same row count");
  const std::size_t m = d.cols();
  if (!opts.fast_paths || !r.is_diagonal()) return block_kernel_route(d, r);

  // Rows sharing a modulus may be recombined unimodularly without changing Z.
  std::map<Integer, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (d.row(i).empty()) continue;
    Integer mu = row_modulus(r, i);
    if (mu.is_one()) continue;
    classes[mu].push_back(i);
  }
  if (classes.empty()) {
    std::vector<EchelonLattice::SparseColumn> basis(m);
    for (std::size_t c = 0; c < m; ++c) basis[c].push_back({c, Integer(1)});
    return EchelonLattice::from_echelon(m, std::move(basis));
  }

  if (classes.size() == 1) {
    const auto& [mu, rows] = *classes.begin();
    if (detail::usable_modulus(mu) && detail::is_prime(static_cast<std::uint64_t>(mu.to_int64()))) {
      const auto p = static_cast<std::uint64_t>(mu.to_int64());
      detail::PrimeRref rref(m, p);
      std::vector<std::pair<std::size_t, std::uint64_t>> buf;
      for (std::size_t i : rows) {
        buf.clear();
        for (const auto& e : d.row(i)) {
          std::uint64_t v = detail::residue(e.value, p);
          if (v) buf.emplace_back(e.col, v);
        }
        if (!buf.empty()) rref.insert(buf);
        if (rref.rank() == m) break;
      }
      return prime_kernel(rref);
    }
  }

  // Compressed normative route: kernel of [H | diag(mu)] over the
  // compressed constraint rows.
  std::vector<std::vector<Integer>> h_rows;
  std::vector<Integer> moduli;
  for (const auto& [mu, rows] : classes) {
    RowCompressor comp(m, mu);
    for (std::size_t i : rows) comp.insert(dense_row(d, i));
    for (auto& row : comp.rows()) {
      h_rows.push_back(std::move(row));
      moduli.push_back(mu);
    }
  }
  IntMatrix h(h_rows.size(), m);
  for (std::size_t i = 0; i < h_rows.size(); ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!h_rows[i][c].is_zero()) h.set(i, c, h_rows[i][c]);
    }
  }
  IntMatrix rel(h_rows.size(), h_rows.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) rel.set(i, i, moduli[i]);
  return block_kernel_route(h, rel);
}

FgAbGroup homology_at(const IntMatrix& r_cur, const IntMatrix& d_prev, const IntMatrix& d_cur,
                      const IntMatrix& r_next, const HomologyOptions& opts) {
  const std::size_t m = r_cur.rows();
  if (d_prev.rows() != m) throw std::invalid_argument("homology_at: D_prev must land in the ambient of R_cur");
  if (d_cur.cols() != m) throw std::invalid_argument("homology_at: D_cur must start at the ambient of R_cur");
  if (r_next.rows() != d_cur.rows()) throw std::invalid_argument("homology_at: R_next must present the target of D_cur");
  if (m == 0) return FgAbGroup();

  if (!maps_into_relations(d_cur * r_cur, r_next)) {
    throw ComplexError("D_cur does not map the relations of C into the relations of C'");
  }

  EchelonLattice z = relative_kernel(d_cur, r_next, opts);
  if (z.dimension() == 0) {
    if (!d_prev.is_zero()) throw ComplexError("D_prev does not land in the cycles: the composite is not zero");
    return FgAbGroup();
  }

  std::vector<std::vector<IntMatrix::Entry>> w_cols;
  auto push_coords = [&](const std::vector<Integer>& v) {
    auto y = z.coordinates(v);
    if (!y) throw ComplexError("D_prev does not land in the cycles: the composite is not zero");
    std::vector<IntMatrix::Entry> col;
    for (std::size_t k = 0; k < y->size(); ++k) {
      if (!(*y)[k].is_zero()) col.push_back({k, (*y)[k]});
    }
    w_cols.push_back(std::move(col));
  };
  IntMatrix prev_t = d_prev.transpose();
  IntMatrix cur_t = r_cur.transpose();
  for (std::size_t j = 0; j < prev_t.rows(); ++j) push_coords(dense_row(prev_t, j));
  for (std::size_t j = 0; j < cur_t.rows(); ++j) push_coords(dense_row(cur_t, j));

  // A finite middle term of exponent e makes col(W) contain e Z^z.
  Integer e(1);
  bool finite = opts.fast_paths && r_cur.is_diagonal() && r_cur.cols() >= m;
  for (std::size_t i = 0; finite && i < m; ++i) {
    Integer mu = row_modulus(r_cur, i);
    if (mu.is_zero()) {
      finite = false;
    } else {
      e = lcm(e, mu);
    }
  }
  if (finite && detail::usable_modulus(e)) {
    return FgAbGroup::from_orders(
        detail::cokernel_orders_mod(z.dimension(), w_cols, static_cast<std::uint64_t>(e.to_int64())));
  }

  IntMatrix w(z.dimension(), w_cols.size());
  for (std::size_t j = 0; j < w_cols.size(); ++j) {
    for (const auto& en : w_cols[j]) w.set(en.col, j, en.value);
  }
  return cokernel_invariants(w);
}

}  // namespace secoh

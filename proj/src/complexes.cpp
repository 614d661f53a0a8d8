#include "secoh/complexes.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "secoh/errors.hpp"

namespace secoh {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return kSaturated;
  return r;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// The face map d_n^k on one tuple, written once for both element-level and
// index-level callers. g holds g_1..g_{n+1} (0-based storage), a the
// degree-(n+1) pairs. Ops supplies mul, identity, add, sub, act, kappa.
template <class T, class Ops>
void apply_face(int n, int k, std::span<const Elem> g, std::span<const T> a, std::vector<Elem>* h, std::vector<T>* b,
                const Ops& ops) {
  if (n < 0 || k < 0 || k > n + 1) throw std::out_of_range("face index out of range");
  auto gi = [&](int i) { return g[static_cast<std::size_t>(i - 1)]; };
  if (h) {
    h->clear();
    for (int i = 1; i <= n; ++i) {
      if (i < k) {
        h->push_back(gi(i));
      } else if (i == k) {
        h->push_back(ops.mul(gi(i), gi(i + 1)));
      } else {
        h->push_back(gi(i + 1));
      }
    }
  }
  if (b) {
    b->clear();
    const int m = n + 1;
    auto at = [&](int i, int j) -> const T& { return a[pair_position(i, j, m)]; };
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (j < k - 1) {
          b->push_back(at(i, j));
        } else if (j == k - 1) {
          Elem p = ops.identity();
          for (int t = i + 1; t <= k - 1; ++t) p = ops.mul(p, gi(t));
          T v = ops.add(at(i, k - 1), at(i, k));
          v = ops.sub(v, ops.act(p, at(k - 1, k)));
          v = ops.add(v, ops.kappa(p, gi(k), gi(k + 1)));
          b->push_back(std::move(v));
        } else if (i <= k - 1) {
          b->push_back(at(i, j + 1));
        } else {
          b->push_back(at(i + 1, j + 1));
        }
      }
    }
  }
}

struct ElementOps {
  const Cocycle3& k;
  Elem mul(Elem x, Elem y) const { return k.action.group().mul(x, y); }
  Elem identity() const { return k.action.group().identity(); }
  GroupElement add(const GroupElement& x, const GroupElement& y) const { return k.action.module().add(x, y); }
  GroupElement sub(const GroupElement& x, const GroupElement& y) const { return k.action.module().sub(x, y); }
  GroupElement act(Elem g, const GroupElement& x) const { return k.action.apply(g, x); }
  GroupElement kappa(Elem x, Elem y, Elem z) const { return k.at(x, y, z); }
};

void check_input(int n, std::size_t g_size, std::size_t a_size, bool want_g, bool want_a) {
  if (n < 0) throw std::invalid_argument("face degree must be non-negative");
  if (want_g && g_size != static_cast<std::size_t>(n + 1)) {
    throw std::invalid_argument("face input needs " + std::to_string(n + 1) + " group entries");
  }
  if (want_a && a_size != pair_count(n + 1)) {
    throw std::invalid_argument("face input needs " + std::to_string(pair_count(n + 1)) + " pair entries");
  }
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::abelian:
      return "abelian";
    case Variant::triple:
      return "triple";
    case Variant::classical:
      return "classical";
  }
  return "?";
}

std::size_t pair_count(int n) { return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2; }

std::size_t pair_position(int i, int j, int n) {
  if (i < 0 || i >= j || j > n - 1) {
    throw std::out_of_range("pair (" + std::to_string(i) + ", " + std::to_string(j) + ") is outside degree " +
                            std::to_string(n));
  }
  return static_cast<std::size_t>(i * (n - 1) - i * (i - 1) / 2 + (j - i - 1));
}

std::vector<GroupElement> face_plain(int n, int k, const FgAbGroup& a_group, std::span<const GroupElement> a) {
  check_input(n, 0, a.size(), false, true);
  const FiniteGroup one = FiniteGroup::trivial();
  const Cocycle3 zero = Cocycle3::zero(GAction::trivial(one, a_group));
  const std::vector<Elem> g(static_cast<std::size_t>(n + 1), one.identity());
  std::vector<GroupElement> b;
  apply_face<GroupElement>(n, k, g, a, nullptr, &b, ElementOps{zero});
  return b;
}

TwistedFace face_twisted(int n, int k, std::span<const Elem> g, std::span<const GroupElement> a, const Cocycle3& kappa) {
  check_input(n, g.size(), a.size(), true, true);
  for (Elem x : g) {
    if (x >= kappa.action.group().order()) throw std::out_of_range("group element out of range");
  }
  TwistedFace out;
  apply_face<GroupElement>(n, k, g, a, &out.g, &out.a, ElementOps{kappa});
  return out;
}

std::vector<Elem> face_classical(int n, int k, const FiniteGroup& group, std::span<const Elem> g) {
  check_input(n, g.size(), 0, true, false);
  if (k < 0 || k > n + 1) throw std::out_of_range("face index out of range");
  std::vector<Elem> h;
  for (int i = 1; i <= n; ++i) {
    const auto s = static_cast<std::size_t>(i - 1);
    if (i < k) {
      h.push_back(g[s]);
    } else if (i == k) {
      h.push_back(group.mul(g[s], g[s + 1]));
    } else {
      h.push_back(g[s + 1]);
    }
  }
  return h;
}

ComplexData ComplexData::abelian(const FgAbGroup& a, const FgAbGroup& b) {
  if (!a.is_finite()) throw ValidationError("A must be finite");
  const FiniteGroup one = FiniteGroup::trivial();
  ComplexData d;
  d.variant = Variant::abelian;
  d.action_a = GAction::trivial(one, a);
  d.action_b = GAction::trivial(one, b);
  d.kappa = Cocycle3::zero(d.action_a);
  return d;
}

ComplexData ComplexData::triple(const GAction& action_a, const GAction& action_b, const Cocycle3& kappa) {
  if (!action_a.module().is_finite()) throw ValidationError("A must be finite");
  if (!(action_a.group() == action_b.group())) throw ValidationError("the actions on A and B use different groups");
  if (!(kappa.action.group() == action_a.group()) || !(kappa.action.module() == action_a.module()) ||
      kappa.action.matrices() != action_a.matrices()) {
    throw ValidationError("kappa is not defined over the given action on A");
  }
  auto check = verify_cocycle3(kappa);
  if (!check.ok) throw ValidationError("kappa fails the cocycle condition at " + format_elems(check.witness));
  ComplexData d;
  d.variant = Variant::triple;
  d.action_a = action_a;
  d.action_b = action_b;
  d.kappa = kappa;
  return d;
}

ComplexData ComplexData::classical(const GAction& action_b) {
  ComplexData d;
  d.variant = Variant::classical;
  d.action_a = GAction::trivial(action_b.group(), FgAbGroup());
  d.action_b = action_b;
  d.kappa = Cocycle3::zero(d.action_a);
  return d;
}

bool ComplexSlice::composite_vanishes() const { return maps_into_relations(d_cur * d_prev, r_next.relations); }

CochainComplex::CochainComplex(ComplexData data) : data_(std::move(data)) {
  const FgAbGroup& A = a();
  if (!A.is_finite()) throw ValidationError("A must be finite");
  const std::uint64_t na = A.element_count();
  if (na > (1u << 16)) throw ValidationError("A has more than 65536 elements");
  for (std::uint64_t i = 0; i < na; ++i) a_elems_.push_back(A.element(i));
  const std::size_t ng = group().order();
  a_add_.resize(na * na);
  a_neg_.resize(na);
  for (std::uint64_t x = 0; x < na; ++x) {
    a_neg_[x] = static_cast<Elem>(A.index_of(A.neg(a_elems_[x])));
    for (std::uint64_t y = 0; y < na; ++y) {
      a_add_[x * na + y] = static_cast<Elem>(A.index_of(A.add(a_elems_[x], a_elems_[y])));
    }
  }
  a_act_.resize(ng * na);
  for (Elem g = 0; g < ng; ++g) {
    for (std::uint64_t x = 0; x < na; ++x) {
      a_act_[g * na + x] = static_cast<Elem>(A.index_of(data_.action_a.apply(g, a_elems_[x])));
    }
  }
  identity_g_.assign(64, group().identity());
  kappa_idx_.resize(ng * ng * ng);
  for (std::size_t i = 0; i < kappa_idx_.size(); ++i) {
    kappa_idx_[i] = static_cast<Elem>(A.index_of(A.reduce(data_.kappa.values.at(i))));
  }
}

Elem CochainComplex::a_index(const GroupElement& x) const { return static_cast<Elem>(a().index_of(a().reduce(x))); }

std::uint64_t CochainComplex::tuple_count(int m) const {
  if (m < 0) throw std::invalid_argument("negative degree");
  std::uint64_t n = 1;
  if (has_group_part()) n = sat_pow(group().order(), static_cast<std::size_t>(m));
  if (has_a_part()) n = sat_mul(n, sat_pow(a_order(), pair_count(m)));
  return n;
}

std::uint64_t CochainComplex::encode(const Tuple& t) const {
  const std::size_t ng = has_group_part() ? static_cast<std::size_t>(t.degree) : 0;
  const std::size_t np = has_a_part() ? pair_count(t.degree) : 0;
  if (t.g.size() != ng || t.a.size() != np) throw std::invalid_argument("tuple shape does not match its degree");
  std::uint64_t idx = 0;
  for (Elem x : t.g) {
    if (x >= group().order()) throw std::out_of_range("group element out of range");
    idx = idx * group().order() + x;
  }
  for (Elem x : t.a) {
    if (x >= a_order()) throw std::out_of_range("A element out of range");
    idx = idx * a_order() + x;
  }
  return idx;
}

Tuple CochainComplex::decode(int m, std::uint64_t index) const {
  Tuple t;
  t.degree = m;
  const std::size_t ng = has_group_part() ? static_cast<std::size_t>(m) : 0;
  const std::size_t np = has_a_part() ? pair_count(m) : 0;
  t.g.resize(ng);
  t.a.resize(np);
  for (std::size_t i = np; i-- > 0;) {
    t.a[i] = static_cast<Elem>(index % a_order());
    index /= a_order();
  }
  for (std::size_t i = ng; i-- > 0;) {
    t.g[i] = static_cast<Elem>(index % group().order());
    index /= group().order();
  }
  if (index != 0) throw std::out_of_range("tuple index out of range");
  return t;
}

Tuple CochainComplex::random_tuple(int m, std::mt19937_64& rng) const {
  Tuple t;
  t.degree = m;
  if (has_group_part()) {
    std::uniform_int_distribution<Elem> dg(0, static_cast<Elem>(group().order() - 1));
    for (int i = 0; i < m; ++i) t.g.push_back(dg(rng));
  }
  if (has_a_part()) {
    std::uniform_int_distribution<Elem> da(0, static_cast<Elem>(a_order() - 1));
    for (std::size_t i = 0; i < pair_count(m); ++i) t.a.push_back(da(rng));
  }
  return t;
}

Elem CochainComplex::g_at(const Tuple& t, int i) const {
  return has_group_part() ? t.g[static_cast<std::size_t>(i - 1)] : group().identity();
}

Tuple CochainComplex::face(int n, int k, const Tuple& t) const {
  Tuple out;
  face_into(n, k, t, out);
  return out;
}

void CochainComplex::face_into(int n, int k, const Tuple& t, Tuple& out) const {
  if (t.degree != n + 1) throw std::invalid_argument("face input must have degree n+1");
  struct IndexOps {
    const CochainComplex& c;
    Elem mul(Elem x, Elem y) const { return c.group().mul(x, y); }
    Elem identity() const { return c.group().identity(); }
    Elem add(Elem x, Elem y) const { return c.a_add_[x * c.a_order() + y]; }
    Elem sub(Elem x, Elem y) const { return add(x, c.a_neg_[y]); }
    Elem act(Elem g, Elem x) const { return c.a_act_[g * c.a_order() + x]; }
    Elem kappa(Elem x, Elem y, Elem z) const {
      const std::size_t n = c.group().order();
      return c.kappa_idx_[(x * n + y) * n + z];
    }
  };
  std::span<const Elem> gs;
  if (has_group_part()) {
    gs = t.g;
  } else {
    if (static_cast<std::size_t>(n + 1) > identity_g_.size()) throw std::out_of_range("degree too large");
    gs = std::span<const Elem>(identity_g_.data(), static_cast<std::size_t>(n + 1));
  }
  out.degree = n;
  if (!has_group_part()) out.g.clear();
  if (!has_a_part()) out.a.clear();
  apply_face<Elem>(n, k, gs, t.a, has_group_part() ? &out.g : nullptr, has_a_part() ? &out.a : nullptr,
                   IndexOps{*this});
}

GroupElement CochainComplex::eval_delta(int n, const CochainFn& f, const Tuple& t) const {
  const FgAbGroup& B = b();
  GroupElement s = B.zero();
  for (int k = 0; k <= n + 1; ++k) {
    GroupElement v = f(face(n, k, t));
    if (k == 0 && has_group_part()) v = act_b(g_at(t, 1), v);
    s = (k % 2 == 0) ? B.add(s, v) : B.sub(s, v);
  }
  return s;
}

void CochainComplex::check_scale(int m, std::uint64_t ceiling) const {
  const std::uint64_t need = sat_mul(tuple_count(m), b().rank());
  if (need > ceiling) {
    throw ScaleError("degree " + std::to_string(m) + " needs ambient rank " +
                         (need == kSaturated ? std::string("above 2^64") : std::to_string(need)) +
                         ", above the ceiling " + std::to_string(ceiling),
                     need, ceiling);
  }
}

PresentedGroup CochainComplex::presentation(int m) const {
  return PresentedGroup::power(b(), static_cast<std::size_t>(tuple_count(m)));
}

AssembledDelta CochainComplex::assemble_delta(int n, std::uint64_t ceiling) const {
  if (n < 0) throw std::invalid_argument("negative degree");
  check_scale(n + 1, ceiling);
  check_scale(n, ceiling);
  const std::size_t r = b().rank();
  const std::uint64_t rows_t = tuple_count(n + 1), cols_t = tuple_count(n);
  AssembledDelta out{IntMatrix(rows_t * r, cols_t * r), presentation(n), presentation(n + 1)};
  if (r == 0) return out;
  const bool twist = has_group_part() && !data_.action_b.is_trivial();
  for (std::uint64_t ti = 0; ti < rows_t; ++ti) {
    const Tuple t = decode(n + 1, ti);
    // Accumulate the row block before writing so cancelling faces vanish.
    std::vector<std::map<std::size_t, Integer>> block(r);
    for (int k = 0; k <= n + 1; ++k) {
      const std::uint64_t si = encode(face(n, k, t));
      const Integer sign(k % 2 == 0 ? 1 : -1);
      if (k == 0 && twist) {
        const IntMatrix& m = data_.action_b.matrix(g_at(t, 1));
        for (std::size_t s = 0; s < r; ++s) {
          for (const auto& e : m.row(s)) block[s][si * r + e.col] += sign * e.value;
        }
      } else {
        for (std::size_t s = 0; s < r; ++s) block[s][si * r + s] += sign;
      }
    }
    for (std::size_t s = 0; s < r; ++s) {
      for (const auto& [col, v] : block[s]) {
        if (!v.is_zero()) out.matrix.set(ti * r + s, col, v);
      }
    }
  }
  return out;
}

ComplexSlice CochainComplex::slice(int n, std::uint64_t ceiling) const {
  if (n < 1) throw std::invalid_argument("a slice needs n >= 1");
  ComplexSlice s;
  s.degree = n;
  auto prev = assemble_delta(n - 1, ceiling);
  auto cur = assemble_delta(n, ceiling);
  s.r_prev = prev.source;
  s.r_cur = prev.target;
  s.r_next = cur.target;
  s.d_prev = std::move(prev.matrix);
  s.d_cur = std::move(cur.matrix);
  return s;
}

CohomologyRecord CochainComplex::cohomology(int n, std::uint64_t ceiling, const HomologyOptions& opts) const {
  if (n < 0) throw std::invalid_argument("negative degree");
  auto cur = assemble_delta(n, ceiling);
  IntMatrix d_prev;
  if (n == 0) {
    d_prev = IntMatrix(cur.source.ambient_rank, 0);
  } else {
    d_prev = assemble_delta(n - 1, ceiling).matrix;
  }
  CohomologyRecord rec;
  rec.source_rank = cur.source.ambient_rank;
  rec.target_rank = cur.target.ambient_rank;
  rec.group = homology_at(cur.source.relations, d_prev, cur.matrix, cur.target.relations, opts);
  return rec;
}

Cochain CochainComplex::tabulate(int n, const CochainFn& f) const {
  const std::uint64_t count = tuple_count(n);
  if (count > (std::uint64_t{1} << 24)) throw ScaleError("cochain table too large", count, std::uint64_t{1} << 24);
  Cochain c;
  c.degree = n;
  c.values.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) c.values.push_back(b().reduce(f(decode(n, i))));
  return c;
}

CochainFn CochainComplex::as_function(const Cochain& c) const {
  auto values = std::make_shared<const std::vector<GroupElement>>(c.values);
  const int degree = c.degree;
  return [this, values, degree](const Tuple& t) -> GroupElement {
    if (t.degree != degree) throw std::invalid_argument("cochain evaluated at a tuple of the wrong degree");
    return values->at(encode(t));
  };
}

CochainFn CochainComplex::random_function(std::uint64_t seed) const {
  return [this, seed](const Tuple& t) -> GroupElement {
    std::uint64_t h = splitmix(seed ^ static_cast<std::uint64_t>(t.degree));
    for (Elem x : t.g) h = splitmix(h ^ x);
    h = splitmix(h ^ 0x5bd1e995ULL);
    for (Elem x : t.a) h = splitmix(h ^ x);
    GroupElement v = b().zero();
    for (std::size_t s = 0; s < b().rank(); ++s) {
      h = splitmix(h + s);
      const Integer& d = b().invariants()[s];
      if (d.is_zero()) {
        v.coeffs[s] = Integer(static_cast<std::int64_t>(h % 21) - 10);
      } else {
        v.coeffs[s] = mod_floor(Integer(h >> 1), d);
      }
    }
    return v;
  };
}

Cochain CochainComplex::random_cochain(int n, std::mt19937_64& rng) const {
  const std::uint64_t seed = rng();
  return tabulate(n, random_function(seed));
}

std::vector<Integer> CochainComplex::coefficients(const Cochain& c) const {
  std::vector<Integer> v;
  v.reserve(c.values.size() * b().rank());
  for (const auto& x : c.values) v.insert(v.end(), x.coeffs.begin(), x.coeffs.end());
  return v;
}

Cochain CochainComplex::from_coefficients(int n, std::span<const Integer> v) const {
  const std::size_t r = b().rank();
  const std::uint64_t count = tuple_count(n);
  if (v.size() != count * r) throw std::invalid_argument("coefficient vector has the wrong length");
  Cochain c;
  c.degree = n;
  for (std::uint64_t i = 0; i < count; ++i) {
    GroupElement x{std::vector<Integer>(v.begin() + static_cast<long>(i * r), v.begin() + static_cast<long>((i + 1) * r))};
    c.values.push_back(b().reduce(std::move(x)));
  }
  return c;
}

GroupElement random_element(const FgAbGroup& g, std::mt19937_64& rng, std::int64_t bound) {
  GroupElement x = g.zero();
  for (std::size_t t = 0; t < g.rank(); ++t) {
    const Integer& d = g.invariants()[t];
    if (d.is_zero()) {
      std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
      x.coeffs[t] = Integer(dist(rng));
    } else {
      x.coeffs[t] = mod_floor(Integer(rng() >> 1), d);
    }
  }
  return x;
}

FgAbGroup secondary_cohomology_abelian(const FgAbGroup& a, const FgAbGroup& b, int n, std::uint64_t ceiling) {
  return CochainComplex(ComplexData::abelian(a, b)).cohomology(n, ceiling).group;
}

FgAbGroup secondary_cohomology_triple(const GAction& action_a, const GAction& action_b, const Cocycle3& kappa, int n,
                                      std::uint64_t ceiling) {
  return CochainComplex(ComplexData::triple(action_a, action_b, kappa)).cohomology(n, ceiling).group;
}

FgAbGroup classical_cohomology(const GAction& action_b, int n, std::uint64_t ceiling) {
  return CochainComplex(ComplexData::classical(action_b)).cohomology(n, ceiling).group;
}

}  // namespace secoh

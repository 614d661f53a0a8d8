#include "secoh/oracle.hpp"

#include <numeric>
#include <set>
#include <unordered_set>

#include "secoh/errors.hpp"

namespace secoh {

namespace {

// B as a finite set with index arithmetic.
struct FiniteB {
  std::uint64_t q = 1;
  std::vector<GroupElement> elems;
  std::vector<std::uint32_t> add, neg, act;  // act[g * q + x]

  explicit FiniteB(const CochainComplex& c) {
    const FgAbGroup& B = c.b();
    q = B.element_count();
    for (std::uint64_t i = 0; i < q; ++i) elems.push_back(B.element(i));
    add.resize(q * q);
    neg.resize(q);
    for (std::uint64_t x = 0; x < q; ++x) {
      neg[x] = static_cast<std::uint32_t>(B.index_of(B.neg(elems[x])));
      for (std::uint64_t y = 0; y < q; ++y) add[x * q + y] = static_cast<std::uint32_t>(B.index_of(B.add(elems[x], elems[y])));
    }
    const std::size_t ng = c.group().order();
    act.resize(ng * q);
    for (Elem g = 0; g < ng; ++g) {
      for (std::uint64_t x = 0; x < q; ++x) act[g * q + x] = static_cast<std::uint32_t>(B.index_of(c.act_b(g, elems[x])));
    }
  }
};

// For every degree-(m+1) tuple: its m+2 face indices and its g_1.
struct FaceTable {
  int m = 0;
  std::uint64_t targets = 0;
  std::vector<std::uint64_t> faces;
  std::vector<Elem> g1;

  FaceTable(const CochainComplex& c, int m_) : m(m_), targets(c.tuple_count(m_ + 1)) {
    const int width = m + 2;
    faces.resize(targets * static_cast<std::uint64_t>(width));
    g1.resize(targets, c.group().identity());
    Tuple f;
    for (std::uint64_t t = 0; t < targets; ++t) {
      const Tuple tau = c.decode(m + 1, t);
      if (c.has_group_part()) g1[t] = tau.g[0];
      for (int k = 0; k < width; ++k) {
        c.face_into(m, k, tau, f);
        faces[t * width + k] = c.encode(f);
      }
    }
  }
};

using Digits = std::vector<std::uint32_t>;

Digits apply_delta(const FaceTable& ft, const FiniteB& b, bool twisted, const Digits& f) {
  const int width = ft.m + 2;
  Digits out(ft.targets);
  for (std::uint64_t t = 0; t < ft.targets; ++t) {
    std::uint32_t s = 0;
    for (int k = 0; k < width; ++k) {
      std::uint32_t v = f[ft.faces[t * width + k]];
      if (k == 0 && twisted) v = b.act[ft.g1[t] * b.q + v];
      s = (k % 2 == 0) ? b.add[s * b.q + v] : b.add[s * b.q + b.neg[v]];
    }
    out[t] = s;
  }
  return out;
}

std::uint64_t key_of(const Digits& d, std::uint64_t q) {
  std::uint64_t k = 0;
  for (auto x : d) k = k * q + x;
  return k;
}

Digits digits_of(std::uint64_t key, std::uint64_t q, std::size_t n) {
  Digits d(n);
  for (std::size_t i = n; i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(key % q);
    key /= q;
  }
  return d;
}

bool is_zero(const Digits& d, std::uint32_t zero) {
  for (auto x : d) {
    if (x != zero) return false;
  }
  return true;
}

}  // namespace

std::uint64_t cochain_group_order(const CochainComplex& c, int n) {
  if (!c.b().is_finite()) throw ValidationError("the oracle needs a finite coefficient group B");
  const std::uint64_t q = c.b().element_count();
  const std::uint64_t count = c.tuple_count(n);
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    if (q > 1 && total > kOracleLimit / q) {
      throw ScaleError("cochain group in degree " + std::to_string(n) + " exceeds the oracle limit", kOracleLimit + 1,
                       kOracleLimit);
    }
    total *= q;
  }
  return total;
}

void enumerate_cochains(const CochainComplex& c, int n, const std::function<void(const Cochain&)>& visit) {
  const std::uint64_t total = cochain_group_order(c, n);
  const FiniteB b(c);
  const std::size_t count = static_cast<std::size_t>(c.tuple_count(n));
  Cochain f;
  f.degree = n;
  for (std::uint64_t key = 0; key < total; ++key) {
    const Digits d = digits_of(key, b.q, count);
    f.values.clear();
    for (auto x : d) f.values.push_back(b.elems[x]);
    visit(f);
  }
}

BruteSummary brute_cohomology_summary(const CochainComplex& c, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  BruteSummary s;
  s.cochains = cochain_group_order(c, n);
  const FiniteB b(c);
  const auto zero = static_cast<std::uint32_t>(c.b().index_of(c.b().zero()));
  const bool twisted = c.has_group_part();
  const std::size_t width_n = static_cast<std::size_t>(c.tuple_count(n));

  std::unordered_set<std::uint64_t> boundaries;
  if (n == 0) {
    boundaries.insert(key_of(Digits(width_n, zero), b.q));
  } else {
    const std::uint64_t prev_total = cochain_group_order(c, n - 1);
    const FaceTable ft(c, n - 1);
    const std::size_t width_prev = static_cast<std::size_t>(c.tuple_count(n - 1));
    for (std::uint64_t key = 0; key < prev_total; ++key) {
      boundaries.insert(key_of(apply_delta(ft, b, twisted, digits_of(key, b.q, width_prev)), b.q));
    }
  }

  const FaceTable ft(c, n);
  std::unordered_set<std::uint64_t> cycles;
  std::set<Digits> images;
  for (std::uint64_t key = 0; key < s.cochains; ++key) {
    const Digits df = apply_delta(ft, b, twisted, digits_of(key, b.q, width_n));
    if (is_zero(df, zero)) cycles.insert(key);
    images.insert(df);
  }
  s.cocycles = cycles.size();
  s.coboundaries = boundaries.size();
  s.image_next = images.size();
  for (auto key : boundaries) {
    if (!cycles.count(key)) throw ComplexError("oracle: a coboundary is not a cocycle");
  }
  s.order = s.cocycles / s.coboundaries;

  s.exponent = 1;
  for (auto key : cycles) {
    const Digits z = digits_of(key, b.q, width_n);
    Digits w = z;
    std::uint64_t k = 1;
    while (!boundaries.count(key_of(w, b.q))) {
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = b.add[w[i] * b.q + z[i]];
      ++k;
    }
    s.exponent = std::lcm(s.exponent, k);
  }
  return s;
}

}  // namespace secoh

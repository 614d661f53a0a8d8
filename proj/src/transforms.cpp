#include "secoh/transforms.hpp"

#include <stdexcept>

#include "secoh/errors.hpp"

namespace secoh {

namespace {

void require_triple(const CochainComplex& c, const char* what) {
  if (c.variant() != Variant::triple) throw std::invalid_argument(std::string(what) + " needs a triple-variant complex");
}

void require_same_data(const Cochain2& u, const CochainComplex& c) {
  if (!(u.action.group() == c.group()) || !(u.action.module() == c.a())) {
    throw std::invalid_argument("u is not defined over the complex's (G, A)");
  }
}

Tuple lift_identity(const CochainComplex& triple, const Tuple& plain) {
  Tuple t;
  t.degree = plain.degree;
  t.g.assign(static_cast<std::size_t>(plain.degree), triple.group().identity());
  t.a = plain.a;
  return t;
}

Tuple drop_a(const Tuple& t) { return Tuple{t.degree, t.g, {}}; }

std::uint64_t seed_from(std::mt19937_64& rng) { return rng(); }

}  // namespace

PhiContext PhiContext::make(const Cocycle3& kappa, const Cocycle3& kappa_prime, const Cochain2& u) {
  const auto& G = kappa.action.group();
  const auto& A = kappa.action.module();
  if (!(kappa_prime.action.group() == G) || !(u.action.group() == G) || !(kappa_prime.action.module() == A) ||
      !(u.action.module() == A)) {
    throw ValidationError("kappa, kappa' and u must share the same group and module");
  }
  const auto du = coboundary2_classical(u);
  const Elem n = static_cast<Elem>(G.order());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        const auto lhs = A.sub(kappa.at(a, b, c), kappa_prime.at(a, b, c));
        if (!(lhs == A.reduce(du[(a * n + b) * n + c]))) {
          throw ValidationError("kappa - kappa' differs from d2(u) at " + format_elems(std::vector<Elem>{a, b, c}));
        }
      }
    }
  }
  return PhiContext{kappa, kappa_prime, u};
}

PhiContext PhiContext::from_u(const Cocycle3& kappa, const Cochain2& u) {
  const auto du = coboundary2_classical(u);
  Cocycle3 kp = kappa;
  for (std::size_t i = 0; i < kp.values.size(); ++i) kp.values[i] = kappa.action.module().sub(kappa.values[i], du[i]);
  return make(kappa, kp, u);
}

Cochain2 add_cochains(const Cochain2& u, const Cochain2& v) {
  if (u.values.size() != v.values.size()) throw std::invalid_argument("cochains have different shapes");
  Cochain2 w = u;
  for (std::size_t i = 0; i < w.values.size(); ++i) w.values[i] = u.action.module().add(u.values[i], v.values[i]);
  return w;
}

Cochain2 negate_cochain(const Cochain2& u) {
  Cochain2 w = u;
  for (auto& x : w.values) x = u.action.module().neg(x);
  return w;
}

Tuple phi_substitute(const CochainComplex& c, const Cochain2& u, const Tuple& t, PhiIndex index) {
  require_triple(c, "Phi_u");
  require_same_data(u, c);
  const int n = t.degree;
  Tuple out = t;
  const FiniteGroup& G = c.group();
  auto g = [&](int i) { return t.g[static_cast<std::size_t>(i - 1)]; };
  for (int i = 0; i < n; ++i) {
    Elem p = G.identity();
    for (int j = i + 1; j < n; ++j) {
      // p = g_{i+1} ... g_{j-1} here.
      Elem x, y;
      if (index == PhiIndex::shifted) {
        x = G.mul(p, g(j));
        y = g(j + 1);
      } else {
        x = p;
        y = g(j);
      }
      const std::size_t pos = pair_position(i, j, n);
      out.a[pos] = c.a_index(c.a().add(c.a_element(t.a[pos]), u.at(x, y)));
      p = G.mul(p, g(j));
    }
  }
  return out;
}

CochainFn phi_u(const CochainComplex& c, const Cochain2& u, CochainFn f, PhiIndex index) {
  require_triple(c, "Phi_u");
  require_same_data(u, c);
  return [&c, u, f = std::move(f), index](const Tuple& t) { return f(phi_substitute(c, u, t, index)); };
}

Cochain phi_u(const PhiContext& ctx, const CochainComplex& source, const Cochain& f) {
  require_triple(source, "Phi_u");
  if (!(source.data().kappa.values == ctx.kappa.values)) {
    throw std::invalid_argument("Phi_u: the cochain's complex does not use the context's kappa");
  }
  return source.tabulate(f.degree, phi_u(source, ctx.u, source.as_function(f)));
}

CochainFn iota(CochainFn f) {
  return [f = std::move(f)](const Tuple& t) { return f(drop_a(t)); };
}

CochainFn rho(const CochainComplex& triple, CochainFn big_f) {
  return [&triple, f = std::move(big_f)](const Tuple& p) { return f(lift_identity(triple, p)); };
}

Cochain iota(const CochainComplex& classical, const CochainComplex& triple, const Cochain& f) {
  if (classical.variant() != Variant::classical) throw std::invalid_argument("iota: source must be classical");
  require_triple(triple, "iota");
  return triple.tabulate(f.degree, iota(classical.as_function(f)));
}

Cochain rho(const CochainComplex& triple, const CochainComplex& plain, const Cochain& big_f) {
  require_triple(triple, "rho");
  if (plain.variant() != Variant::abelian) throw std::invalid_argument("rho: target must be the abelian variant");
  return plain.tabulate(big_f.degree, rho(triple, triple.as_function(big_f)));
}

PointCheck check_delta_squared(const CochainComplex& c, int n, std::size_t samples, std::mt19937_64& rng) {
  const CochainFn f = c.random_function(seed_from(rng));
  const CochainFn df = [&](const Tuple& s) { return c.eval_delta(n, f, s); };
  PointCheck out;
  for (std::size_t i = 0; i < samples; ++i) {
    Tuple t = c.random_tuple(n + 2, rng);
    ++out.checked;
    if (!(c.eval_delta(n + 1, df, t) == c.b().zero())) {
      out.pass = false;
      out.witness = std::move(t);
      break;
    }
  }
  return out;
}

PointCheck check_matrix_matches_pointwise(const CochainComplex& c, int n, std::mt19937_64& rng, std::uint64_t ceiling) {
  const auto delta = c.assemble_delta(n, ceiling);
  const Cochain f = c.random_cochain(n, rng);
  const auto image = c.from_coefficients(n + 1, delta.matrix.apply(c.coefficients(f)));
  const CochainFn ff = c.as_function(f);
  PointCheck out;
  for (std::uint64_t i = 0; i < image.values.size(); ++i) {
    Tuple t = c.decode(n + 1, i);
    ++out.checked;
    if (!(image.values[i] == c.eval_delta(n, ff, t))) {
      out.pass = false;
      out.witness = std::move(t);
      break;
    }
  }
  return out;
}

PointCheck check_simplicial_identity(const CochainComplex& c, int n, std::size_t samples, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("the simplicial identity needs n >= 1");
  PointCheck out;
  Tuple x, y, l1, l2;
  auto test = [&](const Tuple& t) {
    ++out.checked;
    for (int l = 1; l <= n + 1; ++l) {
      for (int k = 0; k < l; ++k) {
        c.face_into(n, l, t, x);
        c.face_into(n - 1, k, x, l1);
        c.face_into(n, k, t, y);
        c.face_into(n - 1, l - 1, y, l2);
        if (!(l1 == l2)) return false;
      }
    }
    return true;
  };
  if (samples == 0) {
    const std::uint64_t count = c.tuple_count(n + 1);
    for (std::uint64_t i = 0; i < count; ++i) {
      Tuple t = c.decode(n + 1, i);
      if (!test(t)) {
        out.pass = false;
        out.witness = std::move(t);
        break;
      }
    }
  } else {
    for (std::size_t i = 0; i < samples; ++i) {
      Tuple t = c.random_tuple(n + 1, rng);
      if (!test(t)) {
        out.pass = false;
        out.witness = std::move(t);
        break;
      }
    }
  }
  return out;
}

PointCheck check_phi_chain_map(const CochainComplex& source, const CochainComplex& target, const Cochain2& u, int n,
                               std::size_t samples, std::mt19937_64& rng, PhiIndex index) {
  require_triple(source, "Phi_u");
  require_triple(target, "Phi_u");
  const CochainFn f = source.random_function(seed_from(rng));
  const CochainFn pf = phi_u(source, u, f, index);
  PointCheck out;
  for (std::size_t i = 0; i < samples; ++i) {
    Tuple t = target.random_tuple(n + 1, rng);
    ++out.checked;
    const auto lhs = target.eval_delta(n, pf, t);
    const auto rhs = source.eval_delta(n, f, phi_substitute(source, u, t, index));
    if (!(lhs == rhs)) {
      out.pass = false;
      out.witness = std::move(t);
      break;
    }
  }
  return out;
}

PointCheck check_phi_composition(const CochainComplex& c, const Cochain2& u, const Cochain2& v, int n,
                                 std::size_t samples, std::mt19937_64& rng) {
  const CochainFn f = c.random_function(seed_from(rng));
  const CochainFn lhs = phi_u(c, u, phi_u(c, v, f));
  const CochainFn rhs = phi_u(c, add_cochains(u, v), f);
  PointCheck out;
  for (std::size_t i = 0; i < samples; ++i) {
    Tuple t = c.random_tuple(n, rng);
    ++out.checked;
    if (!(lhs(t) == rhs(t))) {
      out.pass = false;
      out.witness = std::move(t);
      break;
    }
  }
  return out;
}

PointCheck check_iota_chain_map(const CochainComplex& classical, const CochainComplex& triple, int n,
                                std::size_t samples, std::mt19937_64& rng) {
  if (classical.variant() != Variant::classical) throw std::invalid_argument("iota: source must be classical");
  require_triple(triple, "iota");
  const CochainFn f = classical.random_function(seed_from(rng));
  const CochainFn jf = iota(f);
  PointCheck out;
  for (std::size_t i = 0; i < samples; ++i) {
    Tuple t = triple.random_tuple(n + 1, rng);
    ++out.checked;
    if (!(triple.eval_delta(n, jf, t) == classical.eval_delta(n, f, drop_a(t)))) {
      out.pass = false;
      out.witness = std::move(t);
      break;
    }
  }
  return out;
}

PointCheck check_rho_chain_map(const CochainComplex& triple, const CochainComplex& plain, int n, std::size_t samples,
                               std::mt19937_64& rng) {
  require_triple(triple, "rho");
  if (plain.variant() != Variant::abelian) throw std::invalid_argument("rho: target must be the abelian variant");
  const CochainFn big_f = triple.random_function(seed_from(rng));
  const CochainFn rf = rho(triple, big_f);
  PointCheck out;
  for (std::size_t i = 0; i < samples; ++i) {
    Tuple p = plain.random_tuple(n + 1, rng);
    ++out.checked;
    if (!(plain.eval_delta(n, rf, p) == triple.eval_delta(n, big_f, lift_identity(triple, p)))) {
      out.pass = false;
      out.witness = std::move(p);
      break;
    }
  }
  return out;
}

ExactnessObservation observe_exactness(const CochainComplex& triple, int n, std::uint64_t limit) {
  require_triple(triple, "exactness");
  ExactnessObservation obs;
  obs.degree = n;
  const std::size_t r = triple.b().rank();
  const std::uint64_t count = triple.tuple_count(n);
  if (count > limit || count * std::max<std::size_t>(r, 1) > limit) return obs;
  obs.evaluated = true;
  obs.image_in_kernel = true;
  obs.kernel_in_image = true;
  if (r == 0) return obs;

  const CochainComplex classical(ComplexData::classical(triple.data().action_b));
  const CochainComplex plain(ComplexData::abelian(triple.a(), triple.b()));
  auto indicator = [&](const CochainComplex& c, std::uint64_t at, std::size_t s) -> CochainFn {
    GroupElement v = c.b().zero();
    v.coeffs[s] = Integer(1);
    v = c.b().reduce(std::move(v));
    return [&c, at, v](const Tuple& t) { return c.encode(t) == at ? v : c.b().zero(); };
  };

  // im iota inside ker rho: rho(iota(e_{gamma,s})) must vanish.
  for (std::uint64_t gi = 0; gi < classical.tuple_count(n) && obs.image_in_kernel; ++gi) {
    for (std::size_t s = 0; s < r && obs.image_in_kernel; ++s) {
      const CochainFn img = rho(triple, iota(indicator(classical, gi, s)));
      for (std::uint64_t p = 0; p < plain.tuple_count(n); ++p) {
        if (!(img(plain.decode(n, p)) == plain.b().zero())) {
          obs.image_in_kernel = false;
          break;
        }
      }
    }
  }
  // ker rho is generated by indicators at tuples with g != (e, ..., e); each
  // lies in im iota exactly when it is constant along the A-part.
  for (std::uint64_t ti = 0; ti < count && obs.kernel_in_image; ++ti) {
    const Tuple t = triple.decode(n, ti);
    bool at_identity = true;
    for (Elem x : t.g) at_identity = at_identity && x == triple.group().identity();
    if (at_identity) continue;
    for (std::size_t s = 0; s < r && obs.kernel_in_image; ++s) {
      const CochainFn ind = indicator(triple, ti, s);
      const GroupElement here = ind(t);
      for (std::uint64_t tj = 0; tj < count; ++tj) {
        const Tuple other = triple.decode(n, tj);
        if (other.g == t.g && !(ind(other) == here)) {
          obs.kernel_in_image = false;
          break;
        }
      }
    }
  }
  return obs;
}

TernaryResult ternary_check(const FiniteGroup& g, std::uint64_t samples, std::uint64_t seed) {
  auto f = [&](Elem a, Elem b, Elem c) { return g.mul(g.mul(a, b), g.inverse(c)); };
  TernaryResult res;
  auto test = [&](const std::array<Elem, 6>& x) {
    const auto [a01, a02, a03, a12, a13, a23] = x;
    ++res.checked;
    const Elem lhs = f(f(a01, a02, a12), a03, a13);
    const Elem rhs = f(a01, f(a02, a03, a23), f(a12, a13, a23));
    if (lhs != rhs) {
      res.holds = false;
      res.witness = x;
      return false;
    }
    return true;
  };
  const Elem n = static_cast<Elem>(g.order());
  if (samples == 0) {
    std::array<Elem, 6> x{};
    for (;;) {
      if (!test(x)) return res;
      std::size_t pos = 6;
      while (pos > 0) {
        --pos;
        if (++x[pos] < n) break;
        x[pos] = 0;
        if (pos == 0) return res;
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> d(0, n - 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::array<Elem, 6> x{};
    for (auto& v : x) v = d(rng);
    if (!test(x)) return res;
  }
  return res;
}

TernaryResult ternary_check(const FgAbGroup& a, std::uint64_t samples, std::uint64_t seed) {
  return ternary_check(FiniteGroup::from_abelian(a), samples, seed);
}

}  // namespace secoh

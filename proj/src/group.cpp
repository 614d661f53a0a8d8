#include "secoh/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "secoh/errors.hpp"
#include "secoh/snf.hpp"

namespace secoh {

namespace {

std::string elems(std::initializer_list<Elem> xs) {
  std::vector<Elem> v(xs);
  return format_elems(v);
}

// Column t of m reduced in the module, as an element.
GroupElement column_element(const FgAbGroup& module, const IntMatrix& m, std::size_t t) {
  return module.reduce(GroupElement{m.column(t)});
}

GroupElement unit(const FgAbGroup& module, std::size_t t) {
  GroupElement x = module.zero();
  x.coeffs[t] = Integer(1);
  return module.reduce(std::move(x));
}

}  // namespace

std::string format_elems(std::span<const Elem> xs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ')';
  return os.str();
}

FiniteGroup FiniteGroup::validate(std::size_t order, std::vector<Elem> table, std::optional<Elem> identity) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (table.size() != order * order) {
    throw ValidationError("multiplication table has " + std::to_string(table.size()) + " entries, expected " +
                          std::to_string(order * order));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw ValidationError("table entry " + std::to_string(table[i]) + " at " +
                            elems({static_cast<Elem>(i / order), static_cast<Elem>(i % order)}) + " is out of range");
    }
  }
  std::vector<char> seen(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < order; ++y) {
      Elem v = table[x * order + y];
      if (seen[v]) throw ValidationError("not a Latin square: row " + std::to_string(x) + " repeats " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t y = 0; y < order; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < order; ++x) {
      Elem v = table[x * order + y];
      if (seen[v]) {
        throw ValidationError("not a Latin square: column " + std::to_string(y) + " repeats " + std::to_string(v));
      }
      seen[v] = 1;
    }
  }

  auto is_identity = [&](Elem e) {
    for (std::size_t x = 0; x < order; ++x) {
      if (table[e * order + x] != x || table[x * order + e] != x) return false;
    }
    return true;
  };
  Elem e = 0;
  if (identity) {
    if (*identity >= order) throw ValidationError("identity index " + std::to_string(*identity) + " is out of range");
    if (!is_identity(*identity)) throw ValidationError("element " + std::to_string(*identity) + " is not an identity");
    e = *identity;
  } else {
    bool found = false;
    for (Elem c = 0; c < order && !found; ++c) {
      if (is_identity(c)) {
        e = c;
        found = true;
      }
    }
    if (!found) throw ValidationError("missing identity: no element is a two-sided identity");
  }

  std::vector<Elem> inverse(order);
  for (Elem x = 0; x < order; ++x) {
    bool found = false;
    for (Elem y = 0; y < order && !found; ++y) {
      if (table[x * order + y] == e && table[y * order + x] == e) {
        inverse[x] = y;
        found = true;
      }
    }
    if (!found) throw ValidationError("missing inverse: element " + std::to_string(x) + " has no two-sided inverse");
  }

  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      const Elem xy = table[x * order + y];
      for (Elem z = 0; z < order; ++z) {
        const Elem l = table[xy * order + z];
        const Elem r = table[x * order + table[y * order + z]];
        if (l != r) {
          throw ValidationError("not associative at " + elems({x, y, z}) + ": (xy)z = " + std::to_string(l) +
                                ", x(yz) = " + std::to_string(r));
        }
      }
    }
  }
  return FiniteGroup(order, std::move(table), e, std::move(inverse));
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(1, {0}, 0, {0}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Elem>((x + y) % n);
  }
  return validate(n, std::move(table), 0);
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index = [&](const std::array<int, 3>& q) {
    return static_cast<Elem>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Elem> table(36);
  for (std::size_t x = 0; x < 6; ++x) {
    for (std::size_t y = 0; y < 6; ++y) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[x][perms[y][i]];
      table[x * 6 + y] = index(c);
    }
  }
  return validate(6, std::move(table), 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Elem p = a.mul(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb));
      Elem q = b.mul(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
      table[x * n + y] = static_cast<Elem>(p * nb + q);
    }
  }
  return validate(n, std::move(table), static_cast<Elem>(a.identity() * nb + b.identity()));
}

FiniteGroup FiniteGroup::from_abelian(const FgAbGroup& a) {
  const std::uint64_t n = a.element_count();
  if (n > 4096) throw std::invalid_argument("group too large for a multiplication table");
  std::vector<GroupElement> els;
  for (std::uint64_t i = 0; i < n; ++i) els.push_back(a.element(i));
  std::vector<Elem> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) table[x * n + y] = static_cast<Elem>(a.index_of(a.add(els[x], els[y])));
  }
  return validate(n, std::move(table), static_cast<Elem>(a.index_of(a.zero())));
}

Elem FiniteGroup::product(std::span<const Elem> xs) const {
  Elem r = identity_;
  for (Elem x : xs) r = mul(r, x);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (Elem x = 0; x < order_; ++x) {
    for (Elem y = 0; y < x; ++y) {
      if (mul(x, y) != mul(y, x)) return false;
    }
  }
  return true;
}

GAction GAction::trivial(const FiniteGroup& g, const FgAbGroup& module) {
  return validate_action(g, module, std::vector<IntMatrix>(g.order(), IntMatrix::identity(module.rank())));
}

GAction GAction::by_scalars(const FiniteGroup& g, const FgAbGroup& module, const std::vector<Integer>& scalars) {
  if (scalars.size() != g.order()) throw ValidationError("need one scalar per group element");
  std::vector<IntMatrix> mats;
  for (const auto& s : scalars) {
    IntMatrix m(module.rank(), module.rank());
    for (std::size_t t = 0; t < module.rank(); ++t) m.set(t, t, s);
    mats.push_back(std::move(m));
  }
  return validate_action(g, module, std::move(mats));
}

GroupElement GAction::apply(Elem g, const GroupElement& x) const {
  if (trivial_) return x;
  return module_.reduce(GroupElement{mats_.at(g).apply(x.coeffs)});
}

GAction validate_action(const FiniteGroup& g, const FgAbGroup& module, std::vector<IntMatrix> mats) {
  const std::size_t r = module.rank();
  if (mats.size() != g.order()) {
    throw ValidationError("action needs " + std::to_string(g.order()) + " matrices, got " + std::to_string(mats.size()));
  }
  for (Elem x = 0; x < g.order(); ++x) {
    if (mats[x].rows() != r || mats[x].cols() != r) {
      throw ValidationError("action matrix of element " + std::to_string(x) + " must be " + std::to_string(r) + "x" +
                            std::to_string(r));
    }
  }
  const auto& d = module.invariants();
  // d_t * (column t) must vanish in the module.
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t t = 0; t < r; ++t) {
      if (d[t].is_zero()) continue;
      for (std::size_t s = 0; s < r; ++s) {
        Integer v = d[t] * mats[x].at(s, t);
        if (!divides(d[s], v)) {
          throw ValidationError("action of element " + std::to_string(x) + " is not well defined on generator " +
                                std::to_string(t));
        }
      }
    }
  }
  const IntMatrix rel = module.relations();
  auto same_on_generators = [&](const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t t = 0; t < r; ++t) {
      if (!(column_element(module, a, t) == column_element(module, b, t))) return false;
    }
    return true;
  };
  if (!same_on_generators(mats[g.identity()], IntMatrix::identity(r))) {
    throw ValidationError("identity element " + std::to_string(g.identity()) + " does not act as the identity");
  }
  for (Elem x = 0; x < g.order(); ++x) {
    if (!cokernel_invariants(IntMatrix::hstack(mats[x], rel)).is_trivial()) {
      throw ValidationError("action of element " + std::to_string(x) + " is not an automorphism");
    }
  }
  for (Elem x = 0; x < g.order(); ++x) {
    for (Elem y = 0; y < g.order(); ++y) {
      if (!same_on_generators(mats[x] * mats[y], mats[g.mul(x, y)])) {
        throw ValidationError("action is not a homomorphism at " + elems({x, y}));
      }
    }
  }

  GAction a;
  a.group_ = g;
  a.module_ = module;
  a.trivial_ = true;
  for (Elem x = 0; x < g.order() && a.trivial_; ++x) {
    for (std::size_t t = 0; t < r; ++t) {
      if (!(column_element(module, mats[x], t) == unit(module, t))) {
        a.trivial_ = false;
        break;
      }
    }
  }
  a.mats_ = std::move(mats);
  return a;
}

Cochain2 Cochain2::zero(const GAction& action) {
  const std::size_t n = action.group().order();
  return Cochain2{action, std::vector<GroupElement>(n * n, action.module().zero())};
}

Cocycle3 Cocycle3::zero(const GAction& action) {
  const std::size_t n = action.group().order();
  return Cocycle3{action, std::vector<GroupElement>(n * n * n, action.module().zero())};
}

CocycleCheck verify_cocycle3(const Cocycle3& k) {
  const auto& G = k.action.group();
  const auto& A = k.action.module();
  const Elem n = static_cast<Elem>(G.order());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        for (Elem d = 0; d < n; ++d) {
          GroupElement s = k.action.apply(a, k.at(b, c, d));
          s = A.sub(s, k.at(G.mul(a, b), c, d));
          s = A.add(s, k.at(a, G.mul(b, c), d));
          s = A.sub(s, k.at(a, b, G.mul(c, d)));
          s = A.add(s, k.at(a, b, c));
          if (!(s == A.zero())) return CocycleCheck{false, {a, b, c, d}};
        }
      }
    }
  }
  return {};
}

namespace {

void check_table(const GAction& action, const std::vector<GroupElement>& values, std::size_t expected,
                 const char* what) {
  if (values.size() != expected) {
    throw ValidationError(std::string(what) + " table has " + std::to_string(values.size()) + " entries, expected " +
                          std::to_string(expected));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].coeffs.size() != action.module().rank()) {
      throw ValidationError(std::string(what) + " entry " + std::to_string(i) + " has the wrong number of coordinates");
    }
  }
}

}  // namespace

Cocycle3 make_cocycle3(const GAction& action, std::vector<GroupElement> values) {
  const std::size_t n = action.group().order();
  check_table(action, values, n * n * n, "kappa");
  for (auto& v : values) v = action.module().reduce(std::move(v));
  Cocycle3 k{action, std::move(values)};
  auto check = verify_cocycle3(k);
  if (!check.ok) {
    throw ValidationError("kappa fails the cocycle condition at " + format_elems(check.witness));
  }
  return k;
}

Cochain2 make_cochain2(const GAction& action, std::vector<GroupElement> values) {
  const std::size_t n = action.group().order();
  check_table(action, values, n * n, "u");
  for (auto& v : values) v = action.module().reduce(std::move(v));
  return Cochain2{action, std::move(values)};
}

std::vector<GroupElement> coboundary2_classical(const Cochain2& u) {
  const auto& G = u.action.group();
  const auto& A = u.action.module();
  const Elem n = static_cast<Elem>(G.order());
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n) * n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        GroupElement s = u.action.apply(a, u.at(b, c));
        s = A.sub(s, u.at(G.mul(a, b), c));
        s = A.add(s, u.at(a, G.mul(b, c)));
        s = A.sub(s, u.at(a, b));
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace secoh

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "secoh/complexes.hpp"
#include "secoh/oracle.hpp"
#include "secoh/snf.hpp"
#include "secoh/transforms.hpp"
#include "zoo.hpp"

using namespace secoh;

namespace {

// Wall-clock limits in seconds.
constexpr double kKnownValueLimit = 1.0;   // each of the four values
constexpr double kQuotientLimit = 5.0;     // whole B/2B family
constexpr double kPropertyLimit = 60.0;    // whole complex property suite
constexpr std::size_t kPointSamples = 1000;
constexpr std::size_t kPhiSamples = 100;
constexpr int kRandomU = 10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) notes << "first failure: " << what;
      pass = false;
    }
  }
};

std::string invariants_str(const FgAbGroup& g) {
  std::string s = "[";
  for (std::size_t i = 0; i < g.invariants().size(); ++i) s += (i ? "," : "") + g.invariants()[i].str();
  return s + "]";
}

std::vector<FgAbGroup> coefficient_family() {
  return {zoo::ab({0}), zoo::ab({2}), zoo::ab({4}), zoo::ab({6}), zoo::ab({2, 3}), zoo::ab({0, 2})};
}

void known_values(Outcome& o) {
  struct Row {
    int n;
    std::vector<Integer> b;
    std::vector<Integer> expect;
  };
  const std::vector<Row> rows{{2, {0}, {}}, {2, {2}, {2}}, {3, {0}, {2}}, {3, {2}, {2}}};
  double worst = 0;
  for (const auto& r : rows) {
    const auto t0 = Clock::now();
    const FgAbGroup h = secondary_cohomology_abelian(zoo::ab({2}), zoo::ab(r.b), r.n);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    const std::string what = "n=" + std::to_string(r.n) + " B=" + zoo::ab(r.b).str();
    o.expect(h.invariants() == r.expect, what + " gave " + invariants_str(h));
    o.expect(dt < kKnownValueLimit, what + " too slow");
  }
  o.notes << (o.pass ? "" : "; ") << "slowest " << worst << " s";
}

// B / 2B as the cokernel of [R_B | 2I].
FgAbGroup mod_two(const FgAbGroup& b) {
  const std::size_t r = b.rank();
  std::vector<Integer> twos(r, Integer(2));
  return cokernel_invariants(IntMatrix::hstack(b.relations(), IntMatrix::diagonal(r, r, twos)));
}

void quotient_family(Outcome& o) {
  const auto t0 = Clock::now();
  for (const auto& b : coefficient_family()) {
    const FgAbGroup h = secondary_cohomology_abelian(zoo::ab({2}), b, 3);
    const FgAbGroup want = mod_two(b);
    o.expect(h == want, "B=" + b.str() + " gave " + h.str() + ", B/2B=" + want.str());
    if (o.pass) o.notes << b.str() << "->" << h.str() << " ";
  }
  const double dt = seconds_since(t0);
  o.expect(dt < kQuotientLimit, "family too slow");
  o.notes << (o.pass ? "" : "; ") << dt << " s";
}

// {(b1, b2) : 2 b1 = 2 b2} / {(b, b)} from an integer kernel and a membership solve.
FgAbGroup doubled_pairs(const FgAbGroup& b) {
  const std::size_t r = b.rank();
  // [2I | -2I | R_B] x = 0 picks the pairs whose images agree in B.
  IntMatrix rel(r, 2 * r + r);
  for (std::size_t i = 0; i < r; ++i) {
    rel.set(i, i, 2);
    rel.set(i, r + i, -2);
    rel.set(i, 2 * r + i, b.invariants()[i]);
  }
  const IntMatrix ker = kernel_basis(rel);
  std::vector<std::vector<Integer>> gens;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    auto col = ker.column(j);
    col.resize(2 * r);
    gens.push_back(std::move(col));
  }
  // Subgroup to divide out: the diagonal and the relations of B + B.
  std::vector<std::vector<Integer>> sub;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Integer> d(2 * r), p(2 * r), q(2 * r);
    d[i] = d[r + i] = 1;
    p[i] = b.invariants()[i];
    q[r + i] = b.invariants()[i];
    sub.push_back(d);
    sub.push_back(p);
    sub.push_back(q);
  }
  // Coordinates of the subgroup generators with respect to the kernel generators.
  const IntMatrix k = IntMatrix::from_columns(2 * r, gens);
  std::vector<std::vector<Integer>> coords;
  for (const auto& v : sub) {
    auto x = solve_membership(k, v);
    if (!x) throw std::logic_error("diagonal not inside the kernel");
    coords.push_back(*x);
  }
  // The kernel generators may be dependent; their own relations join the quotient.
  const IntMatrix syz = kernel_basis(k);
  IntMatrix q = IntMatrix::hstack(IntMatrix::from_columns(k.cols(), coords), syz);
  return cokernel_invariants(q);
}

void pair_family(Outcome& o) {
  for (const auto& b : coefficient_family()) {
    const FgAbGroup h = secondary_cohomology_abelian(zoo::ab({2}), b, 2);
    const FgAbGroup want = doubled_pairs(b);
    o.expect(h == want, "B=" + b.str() + " gave " + h.str() + ", direct " + want.str());
    if (o.pass) o.notes << b.str() << "->" << h.str() << " ";
  }
}

void degenerations(Outcome& o) {
  std::vector<GAction> actions;
  for (std::size_t gorder : {2, 3}) {
    const auto g = FiniteGroup::cyclic(gorder);
    for (std::int64_t q : {0, 2, 3}) actions.push_back(GAction::trivial(g, FgAbGroup::cyclic(q)));
  }
  actions.push_back(zoo::z2_negation());
  for (const auto& b : actions) {
    const GAction a = GAction::trivial(b.group(), FgAbGroup());
    for (int n = 0; n <= 3; ++n) {
      const auto lhs = secondary_cohomology_triple(a, b, Cocycle3::zero(a), n);
      const auto rhs = classical_cohomology(b, n);
      o.expect(lhs == rhs, "G=Z" + std::to_string(b.group().order()) + " B=" + b.module().str() +
                               " n=" + std::to_string(n) + ": " + lhs.str() + " vs " + rhs.str());
    }
  }
  const auto one = FiniteGroup::trivial();
  for (std::int64_t qa : {2, 3}) {
    for (std::int64_t qb : {0, 2}) {
      const GAction a = GAction::trivial(one, FgAbGroup::cyclic(qa));
      const GAction b = GAction::trivial(one, FgAbGroup::cyclic(qb));
      const CochainComplex tri(ComplexData::triple(a, b, Cocycle3::zero(a)));
      const CochainComplex pl(ComplexData::abelian(a.module(), b.module()));
      for (int n = 0; n <= 3; ++n) {
        o.expect(tri.assemble_delta(n).matrix == pl.assemble_delta(n).matrix,
                 "matrices differ for A=Z" + std::to_string(qa) + " n=" + std::to_string(n));
      }
    }
  }
  // Trivial A leaves B -0-> B -1-> B -0-> ..., so only degree 0 survives.
  for (std::int64_t qb : {0, 2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      const auto h = secondary_cohomology_abelian(FgAbGroup(), FgAbGroup::cyclic(qb), n);
      o.expect(h.is_trivial(), "A=1 B=Z" + std::to_string(qb) + " n=" + std::to_string(n) + " gave " + h.str());
    }
  }
  for (std::int64_t qa : {2, 3}) {
    for (int n = 0; n <= 4; ++n) {
      const auto h = secondary_cohomology_abelian(FgAbGroup::cyclic(qa), FgAbGroup(), n);
      o.expect(h.is_trivial(), "B=0 n=" + std::to_string(n));
    }
  }
}

void property_suite(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(2024);
  std::uint64_t simplicial = 0;
  for (std::int64_t q : {2, 3, 4}) {
    const CochainComplex c(ComplexData::abelian(FgAbGroup::cyclic(q), FgAbGroup::cyclic(2)));
    for (int n = 1; n <= 4; ++n) {
      const auto r = check_simplicial_identity(c, n, 0, rng);
      o.expect(r.pass && r.checked == c.tuple_count(n + 1),
               "simplicial identity A=Z" + std::to_string(q) + " n=" + std::to_string(n));
      simplicial += r.checked;
    }
  }
  for (std::int64_t qa : {2, 3}) {
    for (std::int64_t qb : {0, 2}) {
      const CochainComplex c(ComplexData::abelian(FgAbGroup::cyclic(qa), FgAbGroup::cyclic(qb)));
      for (int n = 1; n <= 4; ++n) {
        o.expect(c.slice(n).composite_vanishes(), "plain matrix dd A=Z" + std::to_string(qa) + " n=" + std::to_string(n));
      }
    }
  }
  const auto zz = zoo::triples();
  for (std::size_t i : {1, 2, 3}) {  // G = Z2 (B = Z2 and Z) and G = Z3
    const CochainComplex c(ComplexData::triple(zz[i].kappa.action, zz[i].action_b, zz[i].kappa));
    for (int n = 1; n <= 3; ++n) o.expect(c.slice(n).composite_vanishes(), "twisted matrix dd " + zz[i].name);
  }
  for (const auto& z : zz) {
    const CochainComplex c(ComplexData::triple(z.kappa.action, z.action_b, z.kappa));
    for (int n = 0; n <= 4; ++n) {
      const auto r = check_delta_squared(c, n, kPointSamples, rng);
      o.expect(r.pass && r.checked >= kPointSamples, "pointwise dd " + z.name + " n=" + std::to_string(n));
    }
  }
  const double dt = seconds_since(t0);
  o.expect(dt < kPropertyLimit, "suite too slow");
  o.notes << (o.pass ? "" : "; ") << simplicial << " tuples checked exhaustively, " << dt << " s";
}

void phi_suite(Outcome& o) {
  std::mt19937_64 rng(77);
  const auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);
  const std::vector<std::pair<Cocycle3, GAction>> cases{{zoo::z2_cube(), GAction::trivial(z2, zoo::ab({2}))},
                                                        {zoo::carry(3), GAction::trivial(z3, zoo::ab({3}))}};
  for (const auto& [kappa, b] : cases) {
    const CochainComplex src(ComplexData::triple(kappa.action, b, kappa));
    std::vector<FgAbGroup> base;
    for (int n : {2, 3}) base.push_back(src.cohomology(n).group);
    for (int t = 0; t < kRandomU; ++t) {
      const auto u = zoo::random_u(kappa.action, rng);
      const auto v = zoo::random_u(kappa.action, rng);
      const auto ctx = PhiContext::from_u(kappa, u);
      const CochainComplex dst(ComplexData::triple(ctx.kappa_prime.action, b, ctx.kappa_prime));
      const std::string tag = "G=Z" + std::to_string(b.group().order()) + " u#" + std::to_string(t);
      for (int n = 1; n <= 3; ++n) {
        const auto cm = check_phi_chain_map(src, dst, u, n, kPhiSamples, rng);
        o.expect(cm.pass && cm.checked >= kPhiSamples, "chain map " + tag);
        const auto co = check_phi_composition(src, u, v, n, kPhiSamples, rng);
        o.expect(co.pass && co.checked >= kPhiSamples, "composition " + tag);
      }
      for (int i = 0; i < 2; ++i) {
        const int n = 2 + i;
        const auto h = secondary_cohomology_triple(ctx.kappa_prime.action, b, ctx.kappa_prime, n);
        o.expect(h == base[i], "class invariance " + tag + " n=" + std::to_string(n));
      }
    }
  }
}

void oracle_equivalence(Outcome& o) {
  struct Case {
    std::string name;
    CochainComplex c;
    std::vector<int> degrees;
  };
  const auto z2 = FiniteGroup::cyclic(2);
  const GAction a1 = GAction::trivial(z2, FgAbGroup());
  std::vector<Case> cases;
  cases.push_back({"plain A=Z2 B=Z2", CochainComplex(ComplexData::abelian(zoo::ab({2}), zoo::ab({2}))), {0, 1, 2, 3}});
  cases.push_back({"twisted G=Z2 A=1 B=Z2",
                   CochainComplex(ComplexData::triple(a1, GAction::trivial(z2, zoo::ab({2})), Cocycle3::zero(a1))),
                   {0, 1, 2}});
  cases.push_back({"plain A=Z3 B=Z2", CochainComplex(ComplexData::abelian(zoo::ab({3}), zoo::ab({2}))), {1, 2}});
  cases.push_back({"plain A=Z2 B=Z4", CochainComplex(ComplexData::abelian(zoo::ab({2}), zoo::ab({4}))), {2}});
  cases.push_back({"twisted G=Z2 A=Z2 cube", CochainComplex(ComplexData::triple(zoo::z2_cube().action,
                                                                            GAction::trivial(z2, zoo::ab({2})),
                                                                            zoo::z2_cube())),
                   {0, 1}});
  cases.push_back({"classical S3 on Z3", CochainComplex(ComplexData::classical(zoo::s3_sign_on(zoo::ab({3})))), {0, 1}});
  std::size_t compared = 0;
  for (const auto& k : cases) {
    for (int n : k.degrees) {
      const auto brute = brute_cohomology_summary(k.c, n);
      const auto h = k.c.cohomology(n).group;
      const bool same = h.is_finite() && h.order() == Integer(brute.order) && h.exponent() == Integer(brute.exponent);
      o.expect(same, k.name + " n=" + std::to_string(n) + ": " + h.str() + " vs |H|=" +
                         std::to_string(brute.order) + " exp " + std::to_string(brute.exponent));
      ++compared;
    }
  }
  o.notes << (o.pass ? "" : "; ") << compared << " instances";
}

void transforms(Outcome& o) {
  std::mt19937_64 rng(99);
  for (const auto& z : zoo::triples()) {
    const CochainComplex tri(ComplexData::triple(z.kappa.action, z.action_b, z.kappa));
    const CochainComplex cl(ComplexData::classical(z.action_b));
    const CochainComplex pl(ComplexData::abelian(z.kappa.action.module(), z.action_b.module()));
    for (int n = 0; n <= 3; ++n) {
      o.expect(check_iota_chain_map(cl, tri, n, 200, rng).pass, "iota " + z.name + " n=" + std::to_string(n));
      o.expect(check_rho_chain_map(tri, pl, n, 200, rng).pass, "rho " + z.name + " n=" + std::to_string(n));
    }
  }
  // Every abelian group of order at most 6.
  for (auto orders : std::vector<std::vector<Integer>>{{}, {2}, {3}, {4}, {2, 2}, {5}, {6}}) {
    const FgAbGroup a = zoo::ab(orders);
    const auto r = ternary_check(a);
    const std::uint64_t n = a.element_count();
    o.expect(r.holds && r.checked == n * n * n * n * n * n, "ternary " + a.str());
  }
  const auto s3 = ternary_check(FiniteGroup::symmetric3());
  o.expect(!s3.holds && s3.witness.has_value(), "no counterexample for S3");
  if (s3.witness) {
    o.notes << (o.pass ? "" : "; ") << "S3 counterexample (a01,a02,a03,a12,a13,a23) = " << format_elems(*s3.witness);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"known values of H2, H3 over Z2 with B = Z, Z2", known_values},
      {"H3(Z2, B) equals B/2B", quotient_family},
      {"H2(Z2, B) equals doubled-pair quotient", pair_family},
      {"degenerate triples", degenerations},
      {"complex property suite", property_suite},
      {"cocycle class invariance under phi_u", phi_suite},
      {"brute-force oracle equivalence", oracle_equivalence},
      {"iota, rho and ternary associativity", transforms},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " exception: " << e.what();
    }
    const double dt = seconds_since(t0);
    if (!o.pass) ++failures;
    std::printf("%s  criterion %zu: %s  (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, dt,
                o.notes.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

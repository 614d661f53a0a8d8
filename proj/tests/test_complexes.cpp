#include <catch_amalgamated.hpp>

#include <random>

#include "secoh/complexes.hpp"
#include "secoh/errors.hpp"
#include "secoh/transforms.hpp"
#include "zoo.hpp"

using namespace secoh;

namespace {

std::vector<GroupElement> els(std::initializer_list<long long> xs) {
  std::vector<GroupElement> out;
  for (auto x : xs) out.push_back(zoo::el({Integer(x)}));
  return out;
}

CochainComplex plain(std::vector<Integer> a, std::vector<Integer> b) {
  return CochainComplex(ComplexData::abelian(zoo::ab(std::move(a)), zoo::ab(std::move(b))));
}

CochainComplex classical(const GAction& act) { return CochainComplex(ComplexData::classical(act)); }

}  // namespace

TEST_CASE("pair positions") {
  CHECK(pair_count(0) == 0);
  CHECK(pair_count(1) == 0);
  CHECK(pair_count(4) == 6);
  CHECK(pair_position(0, 1, 3) == 0);
  CHECK(pair_position(0, 2, 3) == 1);
  CHECK(pair_position(1, 2, 3) == 2);
  CHECK(pair_position(1, 2, 4) == 3);
  CHECK(pair_position(2, 3, 4) == 5);
  CHECK_THROWS_AS(pair_position(2, 1, 4), std::out_of_range);
  CHECK_THROWS_AS(pair_position(0, 4, 4), std::out_of_range);
  int expect = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) CHECK(pair_position(i, j, 5) == static_cast<std::size_t>(expect++));
}

TEST_CASE("plain faces in degree 3 -> 2") {
  // (a01, a02, a12) in Z3
  const FgAbGroup z3 = zoo::ab({3});
  const auto a = els({1, 2, 0});
  CHECK(face_plain(2, 0, z3, a) == els({0}));
  CHECK(face_plain(2, 1, z3, a) == els({2}));
  CHECK(face_plain(2, 2, z3, a) == els({0}));  // 1 + 2 - 0
  CHECK(face_plain(2, 3, z3, a) == els({1}));
  const auto b = els({2, 2, 2});
  CHECK(face_plain(2, 2, z3, b) == els({2}));
  CHECK_THROWS(face_plain(2, 4, z3, a));
}

TEST_CASE("plain faces in degree 4 -> 3 follow the pair rules") {
  // (a01, a02, a03, a12, a13, a23) in Z4
  const FgAbGroup z4 = zoo::ab({4});
  const auto a = els({1, 2, 3, 0, 1, 2});
  CHECK(face_plain(3, 0, z4, a) == els({0, 1, 2}));        // a12 a13 a23
  CHECK(face_plain(3, 1, z4, a) == els({2, 3, 2}));        // a02 a03 a23
  CHECK(face_plain(3, 2, z4, a) == els({3, 3, 1}));        // a01+a02-a12, a03, a13
  CHECK(face_plain(3, 3, z4, a) == els({1, 3, 3}));        // a01, a02+a03-a23, a12+a13-a23
  CHECK(face_plain(3, 4, z4, a) == els({1, 2, 0}));        // a01 a02 a12
}

TEST_CASE("twisted faces add the cocycle correction") {
  const Cocycle3 k = zoo::z2_cube();
  const std::vector<Elem> g{1, 1, 1};
  const auto a = els({0, 0, 0});
  const auto f2 = face_twisted(2, 2, g, a, k);
  CHECK(f2.g == std::vector<Elem>{1, 0});
  CHECK(f2.a == els({1}));  // kappa(g1, g2, g3)
  const auto f0 = face_twisted(2, 0, g, els({0, 1, 0}), k);
  CHECK(f0.g == std::vector<Elem>{1, 1});
  CHECK(f0.a == els({0}));
  const auto f1 = face_twisted(2, 1, g, els({0, 1, 0}), k);
  CHECK(f1.g == std::vector<Elem>{0, 1});
  CHECK(f1.a == els({1}));
  const auto f3 = face_twisted(2, 3, g, els({1, 0, 0}), k);
  CHECK(f3.g == std::vector<Elem>{1, 1});
  CHECK(f3.a == els({1}));

  // With the sign action P acts on a_{k-1,k}: b01 = a01 + a02 - g1.a12 + kappa.
  const GAction sign = zoo::s3_sign_on(zoo::ab({3}));
  const Cocycle3 zero = Cocycle3::zero(sign);
  const auto t = face_twisted(2, 2, std::vector<Elem>{1, 0, 0}, els({0, 0, 1}), zero);
  CHECK(t.a == els({1}));  // -(-1) = 1
}

TEST_CASE("classical faces") {
  const auto s3 = FiniteGroup::symmetric3();
  const std::vector<Elem> g{1, 2, 5};
  CHECK(face_classical(2, 0, s3, g) == std::vector<Elem>{2, 5});
  CHECK(face_classical(2, 1, s3, g) == std::vector<Elem>{s3.mul(1, 2), 5});
  CHECK(face_classical(2, 2, s3, g) == std::vector<Elem>{1, s3.mul(2, 5)});
  CHECK(face_classical(2, 3, s3, g) == std::vector<Elem>{1, 2});
}

TEST_CASE("index-level faces agree with element-level faces") {
  std::mt19937_64 rng(2);
  const auto k = zoo::carry(3);
  const CochainComplex tri(ComplexData::triple(k.action, GAction::trivial(k.action.group(), zoo::ab({3})), k));
  const auto s3k = zoo::triples()[5];
  const CochainComplex s3c(ComplexData::triple(s3k.kappa.action, s3k.action_b, s3k.kappa));
  for (const CochainComplex* c : {&tri, &s3c}) {
    for (int n = 1; n <= 3; ++n) {
      for (int s = 0; s < 100; ++s) {
        const Tuple t = c->random_tuple(n + 1, rng);
        std::vector<GroupElement> a;
        for (Elem x : t.a) a.push_back(c->a_element(x));
        for (int kk = 0; kk <= n + 1; ++kk) {
          const Tuple f = c->face(n, kk, t);
          const auto e = face_twisted(n, kk, t.g, a, c->data().kappa);
          REQUIRE(f.g == e.g);
          for (std::size_t i = 0; i < f.a.size(); ++i) REQUIRE(c->a_element(f.a[i]) == e.a[i]);
        }
      }
    }
  }
}

TEST_CASE("tuple encoding is a bijection") {
  const auto s3k = zoo::triples()[5];
  const CochainComplex c(ComplexData::triple(s3k.kappa.action, s3k.action_b, s3k.kappa));
  CHECK(c.tuple_count(0) == 1);
  CHECK(c.tuple_count(2) == 36 * 3);
  CHECK(c.tuple_count(3) == 216 * 27);
  for (std::uint64_t i = 0; i < c.tuple_count(2); ++i) CHECK(c.encode(c.decode(2, i)) == i);
  const Tuple t = c.decode(2, 1);
  CHECK(t.g == std::vector<Elem>{0, 0});
  CHECK(t.a == std::vector<Elem>{1});
  CHECK(plain({2}, {2}).tuple_count(40) == UINT64_MAX);
}

TEST_CASE("simplicial identities hold exhaustively for plain and classical complexes") {
  std::mt19937_64 rng(1);
  for (std::int64_t q : {2, 3, 4}) {
    const auto c = plain({q}, {2});
    for (int n = 1; n <= 3; ++n) {
      INFO("A=Z" << q << " n=" << n);
      CHECK(check_simplicial_identity(c, n, 0, rng).pass);
    }
  }
  const auto s3 = classical(zoo::s3_sign_on(zoo::ab({3})));
  for (int n = 1; n <= 3; ++n) CHECK(check_simplicial_identity(s3, n, 0, rng).pass);
}

TEST_CASE("assembled coboundary shapes") {
  const auto c = plain({2}, {2});
  const auto d1 = c.assemble_delta(1);
  CHECK(d1.matrix.rows() == 2);
  CHECK(d1.matrix.cols() == 1);
  const auto d2 = c.assemble_delta(2);
  CHECK(d2.matrix.rows() == 8);
  CHECK(d2.matrix.cols() == 2);
  CHECK(d2.target.ambient_rank == 8);
  const auto cz = plain({2}, {2, 0});
  CHECK(cz.assemble_delta(2).matrix.rows() == 16);
  CHECK(cz.presentation(2).canonical().str() == "Z2 + Z2 + Z + Z");
}

TEST_CASE("coboundary squares to zero on matrices and pointwise") {
  std::mt19937_64 rng(8);
  for (const auto& z : zoo::triples()) {
    const CochainComplex c(ComplexData::triple(z.kappa.action, z.action_b, z.kappa));
    for (int n = 0; n <= 2; ++n) {
      INFO(z.name << " n=" << n);
      if (c.tuple_count(n + 2) * c.b().rank() <= 200000) CHECK(c.slice(n + 1).composite_vanishes());
      CHECK(check_delta_squared(c, n, 200, rng).pass);
    }
  }
  const auto p = plain({3}, {0});
  for (int n = 1; n <= 3; ++n) CHECK(p.slice(n).composite_vanishes());
}

TEST_CASE("matrix action equals pointwise evaluation") {
  std::mt19937_64 rng(12);
  for (const auto& z : zoo::triples()) {
    const CochainComplex c(ComplexData::triple(z.kappa.action, z.action_b, z.kappa));
    for (int n = 0; n <= 1; ++n) {
      INFO(z.name << " n=" << n);
      CHECK(check_matrix_matches_pointwise(c, n, rng).pass);
    }
  }
  CHECK(check_matrix_matches_pointwise(plain({2}, {2, 0}), 3, rng).pass);
  CHECK(check_matrix_matches_pointwise(classical(zoo::z2_negation()), 3, rng).pass);
}

TEST_CASE("classical group cohomology") {
  const auto z2 = FiniteGroup::cyclic(2);
  auto strs = [](const GAction& act, int top) {
    std::vector<std::string> out;
    for (int n = 0; n <= top; ++n) out.push_back(classical_cohomology(act, n).str());
    return out;
  };
  CHECK(strs(GAction::trivial(z2, zoo::ab({0})), 4) == std::vector<std::string>{"Z", "0", "Z2", "0", "Z2"});
  CHECK(strs(GAction::trivial(z2, zoo::ab({2})), 4) == std::vector<std::string>{"Z2", "Z2", "Z2", "Z2", "Z2"});
  CHECK(strs(zoo::z2_negation(), 3) == std::vector<std::string>{"0", "Z2", "0", "Z2"});
  CHECK(strs(GAction::trivial(FiniteGroup::cyclic(3), zoo::ab({3})), 3) ==
        std::vector<std::string>{"Z3", "Z3", "Z3", "Z3"});
  CHECK(strs(GAction::trivial(FiniteGroup::symmetric3(), zoo::ab({0})), 4) ==
        std::vector<std::string>{"Z", "0", "Z2", "0", "Z6"});
  CHECK(strs(GAction::trivial(FiniteGroup::cyclic(4), zoo::ab({0})), 2) == std::vector<std::string>{"Z", "0", "Z4"});
}

TEST_CASE("secondary cohomology of small abelian pairs") {
  CHECK(secondary_cohomology_abelian(zoo::ab({2}), zoo::ab({0}), 2).str() == "0");
  CHECK(secondary_cohomology_abelian(zoo::ab({2}), zoo::ab({2}), 2).str() == "Z2");
  CHECK(secondary_cohomology_abelian(zoo::ab({2}), zoo::ab({0}), 3).str() == "Z2");
  CHECK(secondary_cohomology_abelian(zoo::ab({2}), zoo::ab({2}), 3).str() == "Z2");
  // Degrees 0 and 1 see a single tuple.
  CHECK(secondary_cohomology_abelian(zoo::ab({2}), zoo::ab({3}), 0).str() == "Z3");
  CHECK(secondary_cohomology_abelian(zoo::ab({2}), zoo::ab({3}), 1).str() == "0");
}

TEST_CASE("degenerate triples reduce to the classical and plain complexes") {
  const auto z3 = FiniteGroup::cyclic(3);
  const GAction a_trivial = GAction::trivial(z3, FgAbGroup());
  const GAction b = GAction::trivial(z3, zoo::ab({3}));
  for (int n = 0; n <= 3; ++n) {
    CHECK(secondary_cohomology_triple(a_trivial, b, Cocycle3::zero(a_trivial), n) == classical_cohomology(b, n));
  }
  const auto one = FiniteGroup::trivial();
  const GAction a = GAction::trivial(one, zoo::ab({3}));
  const GAction bb = GAction::trivial(one, zoo::ab({2}));
  const CochainComplex tri(ComplexData::triple(a, bb, Cocycle3::zero(a)));
  const auto pl = plain({3}, {2});
  for (int n = 0; n <= 3; ++n) CHECK(tri.assemble_delta(n).matrix == pl.assemble_delta(n).matrix);
}

TEST_CASE("scale guard") {
  const auto c = plain({2}, {2});
  try {
    (void)c.cohomology(3, 4);
    FAIL("expected a scale error");
  } catch (const ScaleError& e) {
    CHECK(e.required_rank() == 64);
    CHECK(e.ceiling() == 4);
  }
  CHECK_NOTHROW(c.cohomology(2, 8));
}

TEST_CASE("cochain tables and coefficient vectors round-trip") {
  std::mt19937_64 rng(21);
  const auto c = plain({3}, {2, 0});
  const Cochain f = c.random_cochain(2, rng);
  const auto v = c.coefficients(f);
  CHECK(v.size() == 3 * 2);
  const Cochain g = c.from_coefficients(2, v);
  CHECK(g.values == f.values);
  const Cochain h = c.tabulate(2, c.as_function(f));
  CHECK(h.values == f.values);
  const auto r = c.random_function(4);
  const Tuple t = c.decode(2, 1);
  CHECK(r(t) == r(t));
}

TEST_CASE("invalid complex data is rejected") {
  CHECK_THROWS_AS(ComplexData::abelian(zoo::ab({0}), zoo::ab({2})), ValidationError);
  auto bad = zoo::z2_cube();
  bad.values[1] = zoo::el({1});
  CHECK_THROWS_AS(ComplexData::triple(bad.action, GAction::trivial(bad.action.group(), zoo::ab({2})), bad),
                  ValidationError);
  CHECK_THROWS_AS(ComplexData::triple(bad.action, GAction::trivial(FiniteGroup::cyclic(3), zoo::ab({2})),
                                      zoo::z2_cube()),
                  ValidationError);
}

#include <catch_amalgamated.hpp>

#include "secoh/complexes.hpp"
#include "secoh/errors.hpp"
#include "secoh/homology.hpp"
#include "zoo.hpp"

using namespace secoh;

namespace {

IntMatrix empty(std::size_t rows) { return IntMatrix(rows, 0); }

}  // namespace

TEST_CASE("homology of small hand-built complexes") {
  // Z --2--> Z --0--> Z
  CHECK(homology_at(empty(1), IntMatrix{{2}}, IntMatrix{{0}}, empty(1)).str() == "Z2");
  // Z --0--> Z --3--> Z: no cycles
  CHECK(homology_at(empty(1), IntMatrix{{0}}, IntMatrix{{3}}, empty(1)).str() == "0");
  // Z2 --0--> Z4 --0--> Z2 gives Z4.
  CHECK(homology_at(IntMatrix{{4}}, IntMatrix{{0}}, IntMatrix{{0}}, IntMatrix{{2}}).str() == "Z4");
  // Z4 --(x2)--> Z4 --(x2)--> Z4: ker = <2>, im = <2>.
  CHECK(homology_at(IntMatrix{{4}}, IntMatrix{{2}}, IntMatrix{{2}}, IntMatrix{{4}}).str() == "0");
  // Z --1--> Z2 --1--> Z4 is not a complex map (2 does not go to 0 in Z4).
  CHECK_THROWS_AS(homology_at(IntMatrix{{2}}, IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix{{4}}), ComplexError);
  // Z --1--> Z --1--> Z: d_prev does not land in the cycles.
  CHECK_THROWS_AS(homology_at(empty(1), IntMatrix{{1}}, IntMatrix{{1}}, empty(1)), ComplexError);
  CHECK_THROWS_AS(homology_at(empty(2), IntMatrix{{1}}, IntMatrix{{1}}, empty(1)), std::invalid_argument);
}

TEST_CASE("homology with mixed moduli on a diagonal presentation") {
  // C = Z2 + Z3 + Z, D_cur kills the torsion and doubles the free part.
  IntMatrix r_cur{{2, 0}, {0, 3}, {0, 0}};
  IntMatrix d_cur{{0, 0, 2}};
  IntMatrix d_prev{{0}, {0}, {0}};
  for (bool fast : {true, false}) {
    HomologyOptions o{fast};
    CHECK(homology_at(r_cur, d_prev, d_cur, empty(1), o).str() == "Z6");
  }
}

TEST_CASE("relative kernel") {
  IntMatrix d{{1, 1}};
  IntMatrix r{{3}};
  auto z = relative_kernel(d, r);
  CHECK(z.dimension() == 2);
  CHECK(z.contains(std::vector<Integer>{1, 2}));
  CHECK_FALSE(z.contains(std::vector<Integer>{1, 0}));
  CHECK(maps_into_relations(IntMatrix{{3, 6}}, r));
  CHECK_FALSE(maps_into_relations(IntMatrix{{3, 4}}, r));
}

TEST_CASE("fast paths agree with the reference route on real slices") {
  struct Case {
    CochainComplex c;
    int max_n;
  };
  std::vector<Case> cases;
  cases.push_back({CochainComplex(ComplexData::abelian(zoo::ab({2}), zoo::ab({2}))), 3});
  cases.push_back({CochainComplex(ComplexData::abelian(zoo::ab({2}), zoo::ab({0}))), 3});
  cases.push_back({CochainComplex(ComplexData::abelian(zoo::ab({3}), zoo::ab({6}))), 2});
  cases.push_back({CochainComplex(ComplexData::abelian(zoo::ab({2}), zoo::ab({2, 0}))), 3});
  cases.push_back({CochainComplex(ComplexData::triple(zoo::z2_cube().action,
                                                      GAction::trivial(FiniteGroup::cyclic(2), zoo::ab({4})),
                                                      zoo::z2_cube())),
                   2});
  cases.push_back({CochainComplex(ComplexData::classical(zoo::z2_negation())), 4});
  cases.push_back({CochainComplex(ComplexData::classical(zoo::s3_sign_on(zoo::ab({3})))), 3});
  for (const auto& k : cases) {
    for (int n = 0; n <= k.max_n; ++n) {
      INFO(variant_name(k.c.variant()) << " n=" << n);
      const auto fast = k.c.cohomology(n, kDefaultCeiling, {true}).group;
      const auto slow = k.c.cohomology(n, kDefaultCeiling, {false}).group;
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("zero differentials give the cochain groups back") {
  // C^n = B^N with zero maps on both sides.
  IntMatrix r = zoo::ab({2, 0}).relations();
  IntMatrix z(2, 2);
  CHECK(homology_at(r, z, z, r).str() == "Z2 + Z");
}

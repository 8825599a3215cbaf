// Presentation templates, the class-2 refinement, catalog composition for
// orders p^4..p^6, and isomorphism fingerprints.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "pnil/catalog.hpp"
#include "pnil/props.hpp"

using namespace pnil;
using namespace pnil::catalog;

TEST_CASE("class-2 refinement layers the generators") {
  const auto mp = family_e_presentation(3, 7);
  const PcPresentation pc = refine_class2(mp);
  REQUIRE(pc.count() == 6);
  CHECK(pc.name(0) == "a");
  CHECK(pc.name(1) == "b");
  CHECK(pc.name(2) == "c");
  CHECK(pc.name(3) == "b_1");
  CHECK(pc.name(4) == "c_1");
  CHECK(pc.name(5) == "c_2");
  for (int i = 0; i < 6; ++i) CHECK(pc.rel_order(i) == 3);

  const PcGroup G(pc);
  CHECK(G.consistency_check().ok);
  // c a = a c [a,c]^{-1} = a c b^{-p}, and b^p is the layer generator b_1
  const Element ca = multiply(pc, generator_element(pc, 2), generator_element(pc, 0));
  CHECK(ca == Element{{1, 0, 1, 2, 0, 0}});
}

TEST_CASE("refinement rejects non-central commutator values") {
  MinimalPresentation mp;
  mp.p = 3;
  mp.generators = {{"a", 2}, {"b", 2}, {"c", 2}};
  mp.commutators[{1, 2}] = Word{{0, 1}};  // [b,c] = a, not a p-th power
  CHECK_THROWS_AS(refine_class2(mp), PresentationError);
}

TEST_CASE("family A spot group at p = 3") {
  const PcGroup G(refine_class2(family_a_presentation(3, 2, 2, 1)));
  CHECK(G.order() == 81);
  CHECK(G.consistency_check().ok);

  const auto& pc = G.presentation();
  const int ia1 = pc.index_of("a1"), ia2 = pc.index_of("a2"), ib = pc.index_of("b");
  REQUIRE(ia1 == 0);
  REQUIRE(ia2 == 1);
  REQUIRE(ib == 2);
  const u32 a1 = G.gen(ia1), a2 = G.gen(ia2), b = G.gen(ib);

  CHECK(center(G) == closure(G, {b}));
  CHECK(center(G).order() == 9);
  CHECK(omega(G, 1).order() == 27);
  CHECK(abelian_invariants(G) == std::vector<int>{1, 1, 1});
  // a1 a2 = a2 a1 b^3
  CHECK(G.mul(a1, a2) != G.mul(a2, a1));
  CHECK(G.mul(G.mul(a2, a1), G.power(b, 3)) == G.mul(a1, a2));
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(family_a_presentation(3, 1, 2, 1), Error);
  CHECK_THROWS_AS(family_a_presentation(3, 2, 2, 2), Error);  // 2s <= t
  CHECK_THROWS_AS(family_b_presentation(3, 2, 1, 0), Error);  // n >= 3
  CHECK_THROWS_AS(family_b_presentation(3, 3, 2, 1), Error);  // 2s+1 <= t
  CHECK_THROWS_AS(family_e_presentation(3, 13), Error);
  CHECK_THROWS_AS(e9_lambda_presentation(3, 0), Error);
  CHECK_THROWS_AS(abelian_presentation(3, std::vector<int>(9, 1)), Error);
  CHECK(least_nonsquare(3) == 2);
  CHECK(least_nonsquare(5) == 2);
  CHECK(least_nonsquare(7) == 3);
  CHECK(least_nonsquare(11) == 2);
  CHECK_THROWS_AS(least_nonsquare(2), Error);
}

TEST_CASE("catalog sizes") {
  for (i64 p : {3, 5}) {
    CHECK(catalog_for_order(p, 4).size() == 7);
    CHECK(catalog_for_order(p, 5).size() == 13);
    CHECK(catalog_for_order(p, 6).size() == 33);
  }
  CHECK(catalog_for_order(2, 4).size() == 6);
  CHECK(catalog_for_order(2, 5).size() == 11);
  CHECK(catalog_for_order(2, 6).size() == 23);
  CHECK_THROWS_AS(catalog_for_order(4, 4), Error);
  CHECK_THROWS_AS(catalog_for_order(3, 7), Error);
}

TEST_CASE("catalog entries build into consistent groups of the right order") {
  auto probe = [](i64 p, int x) {
    std::set<std::string> labels;
    for (const auto& e : catalog_for_order(p, x)) {
      CHECK(labels.insert(e.label).second);  // labels unique
      const PcGroup G = e.build();
      CHECK(G.order() == static_cast<u64>(ipow(p, x)));
      CHECK(G.consistency_check().ok);
      CHECK(type_signature(G) == e.type_invariants);
    }
  };
  probe(3, 4);
  probe(3, 5);
  probe(2, 4);
  probe(2, 5);
  probe(2, 6);
}

TEST_CASE("frozen subgroup facts for exceptional entries") {
  const PcGroup e10(refine_class2(family_e_presentation(3, 10)));
  CHECK(center(e10).order() == 81);
  CHECK(subgroup_agemo(e10, center(e10), 1).order() == 9);
  CHECK(is_pn(e10));

  // E8 and E9 share every fingerprint invariant
  const PcGroup e8(refine_class2(family_e_presentation(3, 8)));
  const PcGroup e9(refine_class2(family_e_presentation(3, 9)));
  CHECK(fingerprint(e8) == fingerprint(e9));

  // lambda = 1 reproduces E8 exactly
  const auto lam1 = e9_lambda_presentation(3, 1);
  CHECK(lam1.commutators == family_e_presentation(3, 8).commutators);

  // the two class-2 six-generator B/A entries of order 3^6 differ
  const PcGroup a331(refine_class2(family_a_presentation(3, 3, 3, 1)));
  const PcGroup b330(refine_class2(family_b_presentation(3, 3, 3, 0)));
  const auto fa = fingerprint(a331), fb = fingerprint(b330);
  CHECK(fa != fb);
  // both have |Z| = p^4, but Z = p x p^3 in A(3,3,1), p x p x p^2 in B(3,3,0)
  CHECK(fa.center_pow_exp == 2);
  CHECK(fb.center_pow_exp == 1);
}

TEST_CASE("fingerprints separate abelian types and record pn data") {
  const PcGroup c81(refine_class2(abelian_presentation(3, {4})));
  const PcGroup c27x3(refine_class2(abelian_presentation(3, {3, 1})));
  const auto f1 = fingerprint(c81), f2 = fingerprint(c27x3);
  CHECK(f1 != f2);
  CHECK(f1.abelianization == std::vector<int>{4});
  CHECK(f2.abelianization == std::vector<int>{1, 3});
  CHECK(f1.pn_class == 1);
  CHECK(f1.pn_coclass == 3);
  CHECK(f1.exponent_exp == 4);
  CHECK(f2.exponent_exp == 3);
  CHECK(f1.order_histogram == std::vector<u64>{1, 2, 6, 18, 54});

  const PcGroup g322 = rank2::build_group(rank2::type_one(3, 2, 2), 3);
  const auto fg = fingerprint(g322);
  CHECK(fg.pn_class == 2);
  CHECK(fg.derived_exp == 1);
  CHECK(fg.type_sig == std::vector<int>{2, 3});
}

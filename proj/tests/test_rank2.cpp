// Parameter validation, construction, recovery, enumeration, and the count
// formulas for the two-generator groups.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pnil/props.hpp"
#include "pnil/rank2.hpp"

using namespace pnil;
using namespace pnil::rank2;

TEST_CASE("parameter validation ranges") {
  CHECK(validate(type_one(3, 2, 2)));
  CHECK(validate(type_one(3, 1, 2)));
  CHECK_FALSE(validate(type_one(3, 2, 1)));   // r >= 2
  CHECK_FALSE(validate(type_one(3, 2, 3)));   // r <= n-1
  CHECK_FALSE(validate(type_one(4, 1, 2)));   // m >= n-r
  CHECK(validate(type_two(5, 4, 3, 2)));
  CHECK_FALSE(validate(type_two(5, 4, 2, 2)));  // l > r
  CHECK_FALSE(validate(type_two(5, 3, 3, 2)));  // l < m
  CHECK_FALSE(validate(type_two(5, 4, 4, 2)));  // l < m fails
  CHECK(validate(type_two(4, 4, 3, 2)));
  CHECK_FALSE(validate(type_two(6, 4, 3, 2)));  // n-r <= l fails

  CHECK(type_one(3, 2, 2).label() == "G(3,2,2)");
  CHECK(type_two(5, 4, 3, 2).label() == "G(5,4,3,2)");
  CHECK(type_one(3, 2, 2).order_exp() == 5);

  // ordering: all type I precede all type II
  std::vector<Params> v{type_two(4, 4, 3, 2), type_one(5, 3, 2)};
  std::sort(v.begin(), v.end());
  CHECK(v[0].variant == Variant::type_one);
}

TEST_CASE("built groups are consistent and have the declared shape") {
  for (i64 p : {2, 3, 5}) {
    const PcGroup G = build_group(type_one(3, 2, 2), p);
    CHECK(G.order() == static_cast<u64>(ipow(p, 5)));
    CHECK(G.consistency_check().ok);
    CHECK(G.order_of(G.gen(1)) == ipow(p, 3));  // a
    CHECK(G.order_of(G.gen(0)) == ipow(p, 2));  // b
    CHECK_FALSE(is_abelian(G));
  }
  const PcGroup T = build_group(type_two(5, 4, 3, 2), 3);
  CHECK(T.consistency_check().ok);
  CHECK(T.order() == static_cast<u64>(ipow(3, 9)));
  // b^{p^m} = a^{p^l} gives b element order p^{m + n - l}
  CHECK(T.order_of(T.gen(0)) == ipow(3, 4 + 5 - 3));
  CHECK_THROWS_AS(build_group(type_one(3, 2, 1), 3), Error);
}

TEST_CASE("frozen subgroup facts at p = 3") {
  const PcGroup G = build_group(type_one(4, 2, 2), 3);
  const u32 a = G.gen(1);
  CHECK(center(G) == closure(G, {G.power(a, 9)}));
  CHECK(center(G).order() == 9);
  CHECK(derived_subgroup(G).order() == 9);  // p^{n-r}

  const PcGroup T = build_group(type_two(5, 4, 3, 2), 3);
  CHECK(center(T).order() == 27);
  CHECK(is_pn(T));
  CHECK(pn_class(T) == 3);
  CHECK(is_strongly_powerful(T));
}

TEST_CASE("structure invariants recover every parameter tuple") {
  for (int x = 4; x <= 9; ++x)
    for (const auto& P : enumerate_rank2(x)) {
      const PcGroup G = build_group(P, 3);
      CHECK(structure_invariants(G) == P);
    }
  // a couple of spot checks at other primes
  CHECK(structure_invariants(build_group(type_one(4, 3, 2), 2)) == type_one(4, 3, 2));
  CHECK(structure_invariants(build_group(type_two(4, 4, 3, 2), 5)) ==
        type_two(4, 4, 3, 2));
}

TEST_CASE("structure invariants reject other shapes") {
  // abelian
  const PcPresentation ab(3, {{"a", 2}, {"b", 2}}, {{}, {}}, {});
  CHECK_THROWS_AS(structure_invariants(PcGroup(ab)), NotRank2);
  // three-generator
  const PcPresentation h(3, {{"a", 1}, {"b", 1}, {"c", 1}}, {{}, {}, {}},
                         {{{0, 1}, Word{{1, 1}, {2, 1}}}});
  CHECK_THROWS_AS(structure_invariants(PcGroup(h)), NotRank2);
}

TEST_CASE("enumeration matches the brute counts") {
  for (int x = 4; x <= 14; ++x) {
    const auto list = enumerate_rank2(x);
    CHECK(std::is_sorted(list.begin(), list.end()));
    const auto c = count_brute(x);
    const i64 t1 = static_cast<i64>(
        std::count_if(list.begin(), list.end(),
                      [](const Params& P) { return P.variant == Variant::type_one; }));
    CHECK(t1 == c.type_one);
    CHECK(static_cast<i64>(list.size()) - t1 == c.type_two);
    for (const auto& P : list) {
      CHECK(validate(P));
      CHECK(P.order_exp() == x);
    }
    // no duplicates
    CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
  }
}

TEST_CASE("closed counts match enumeration and frozen values") {
  for (int x = 4; x <= 60; ++x) CHECK(count_closed(x) == count_brute(x));
  CHECK(count_closed(4) == CountBreakdown{4, 2, 1, 0, 3});
  CHECK(count_closed(5) == CountBreakdown{5, 2, 2, 0, 4});
  CHECK(count_closed(6) == CountBreakdown{6, 3, 4, 0, 7});
  CHECK(count_closed(8) == CountBreakdown{8, 4, 9, 1, 14});
  CHECK(count_closed(9) == CountBreakdown{9, 4, 12, 2, 18});
  CHECK(count_closed(10) == CountBreakdown{10, 5, 16, 4, 25});
  CHECK_THROWS_AS(count_closed(3), Error);
  CHECK(type2_closed_display(7) == 0);
  CHECK(type2_closed_display(8) == 1);
  CHECK(type2_closed_display(9) == 2);
}

TEST_CASE("type II display shadow check") {
  const auto rep = shadow_check_type2(8, 60);
  CHECK(rep.display_matches_enumeration);
  CHECK(rep.mismatches.empty());
}

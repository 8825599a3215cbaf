// Collection, normal forms, and the group layer (closure, quotients,
// consistency) on small hand-checked groups.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "pnil/group.hpp"
#include "pnil/props.hpp"

using namespace pnil;

namespace {

// <b, a | b^2 = 1, a^8 = 1, a^b = a^5>: the modular group of order 16.
PcPresentation mod16() {
  return PcPresentation(2, {{"b", 1}, {"a", 3}}, {{}, {}},
                        {{{0, 1}, Word{{1, 5}}}});
}

// Heisenberg group of order p^3, exponent p (p odd).
PcPresentation heis(i64 p) {
  return PcPresentation(p, {{"a", 1}, {"b", 1}, {"c", 1}}, {{}, {}, {}},
                        {{{0, 1}, Word{{1, 1}, {2, 1}}}});
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK_THROWS_AS(PcPresentation(4, {{"a", 1}}, {{}}, {}), PresentationError);
  CHECK_THROWS_AS(PcPresentation(2, {}, {}, {}), PresentationError);
  CHECK_THROWS_AS(PcPresentation(2, {{"a", 0}}, {{}}, {}), PresentationError);
  CHECK_THROWS_AS(PcPresentation(2, {{"a", 63}}, {{}}, {}), PresentationError);
  // power word may only use strictly later generators
  CHECK_THROWS_AS(PcPresentation(2, {{"a", 1}, {"b", 1}}, {Word{{0, 1}}, {}}, {}),
                  PresentationError);
  // conjugation tail condition: word over generators >= j
  CHECK_THROWS_AS(PcPresentation(3, {{"a", 1}, {"b", 1}, {"c", 1}},
                                 {{}, {}, {}},
                                 {{{1, 2}, Word{{2, 1}, {0, 1}}}}),
                  PresentationError);
  // total order cap
  std::vector<PcGenerator> big(21, {"g", 2});
  for (size_t i = 0; i < big.size(); ++i) big[i].name = "g" + std::to_string(i);
  CHECK_THROWS_AS(PcPresentation(2, big, std::vector<Word>(21), {}),
                  PresentationError);

  const PcPresentation pc = mod16();
  CHECK(pc.order() == 16);
  CHECK(pc.order_exp() == 4);
  CHECK(pc.rel_order(1) == 8);
  CHECK(pc.index_of("a") == 1);
  CHECK(pc.index_of("zz") == -1);
  CHECK(pc.conj_trivial(0, 1) == false);
}

TEST_CASE("collection normal forms in the modular group of order 16") {
  const PcPresentation pc = mod16();
  const Element a = generator_element(pc, 1);
  const Element b = generator_element(pc, 0);

  // a * b collects to b a^5
  CHECK(multiply(pc, a, b) == Element{{1, 5}});
  // b a^5 * b a^5 = a^{25 mod 8} b^2 ... = a^30 -> a^6
  CHECK(multiply(pc, Element{{1, 5}}, Element{{1, 5}}) == Element{{0, 6}});
  CHECK(order_of(pc, a) == 8);
  CHECK(order_of(pc, b) == 2);
  CHECK(order_of(pc, Element{{1, 5}}) == 8);
  CHECK(is_identity(power(pc, a, 8)));
  CHECK(power(pc, a, -1) == Element{{0, 7}});
  CHECK(multiply(pc, inverse(pc, a), a) == identity(pc));
  CHECK(commutator(pc, a, b) == Element{{0, 4}});
  CHECK(conjugate(pc, a, b) == Element{{0, 5}});

  // negative and oversized exponents in words normalize correctly
  CHECK(normalize(pc, Word{{1, -3}}) == Element{{0, 5}});
  CHECK(normalize(pc, Word{{1, 21}}) == Element{{0, 5}});
  // b a^5 b a^3 = b (b a) a^3 = a^4
  CHECK(normalize(pc, Word{{0, 1}, {1, 5}, {0, 1}, {1, 3}}) == Element{{0, 4}});
}

TEST_CASE("exhaustive associativity and consistency on two engines") {
  for (const PcPresentation& pc : {mod16(), heis(3)}) {
    const PcGroup G(pc);
    CHECK(G.consistency_check().ok);
    const u32 n = static_cast<u32>(G.order());
    for (u32 x = 0; x < n; ++x)
      for (u32 y = 0; y < n; ++y)
        for (u32 z = 0; z < n; ++z)
          CHECK(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z)));
  }
}

TEST_CASE("an inconsistent presentation is caught") {
  // b^a = b^2 requires conjugation by a to be an automorphism of order
  // dividing 3, but b -> b^2 has order 2 on C_3; collection still terminates
  // and the relation check must flag the mismatch.
  const PcPresentation pc(3, {{"a", 1}, {"b", 1}}, {{}, {}},
                          {{{0, 1}, Word{{1, 2}}}});
  const PcGroup G(pc);
  CHECK_FALSE(G.consistency_check().ok);
}

TEST_CASE("index mapping round trips") {
  const PcGroup G(mod16());
  for (u32 x = 0; x < G.order(); ++x) CHECK(G.index_of(G.element_of(x)) == x);
  CHECK(G.element_of(0) == identity(G.presentation()));
  CHECK(G.gen(0) == G.index_of(generator_element(G.presentation(), 0)));
}

TEST_CASE("mul table cache agrees with collection") {
  const PcGroup G(mod16());
  std::vector<u32> before;
  for (u32 x = 0; x < G.order(); ++x)
    for (u32 y = 0; y < G.order(); ++y) before.push_back(G.mul(x, y));
  G.cache_mul_table();
  CHECK(G.has_mul_table());
  size_t i = 0;
  for (u32 x = 0; x < G.order(); ++x)
    for (u32 y = 0; y < G.order(); ++y) CHECK(G.mul(x, y) == before[i++]);
}

TEST_CASE("closure, normal closure, center, quotient on the order-16 group") {
  const PcGroup G(mod16());
  const PcPresentation& pc = G.presentation();
  const u32 a = G.gen(1), b = G.gen(0);

  const Subgroup D = derived_subgroup(G);
  CHECK(D.order() == 2);
  CHECK(D == closure(G, {G.power(a, 4)}));

  const Subgroup Z = center(G);
  CHECK(Z.order() == 4);
  CHECK(Z == closure(G, {G.power(a, 2)}));

  const Subgroup O1 = omega(G, 1);
  const std::set<u32> want = {0u, G.power(a, 4), b, G.mul(G.power(a, 4), b)};
  CHECK(std::set<u32>(O1.elements.begin(), O1.elements.end()) == want);

  CHECK(is_normal(G, D));
  // conjugates of b are b and a^4 b, so the normal closure is the omega-1
  // subgroup of order 4
  CHECK(normal_closure(G, {b}).order() == 4);
  CHECK(is_normal(G, normal_closure(G, {b})));

  const QuotientGroup Q = quotient(G, D);
  CHECK(Q.order() == 8);
  CHECK(is_abelian(Q));
  CHECK(abelian_invariants(G) == std::vector<int>{1, 2});
  CHECK(type_signature(Q) == std::vector<int>{1, 2});
  for (u32 x = 0; x < G.order(); ++x)
    CHECK(Q.project(G.mul(x, G.power(a, 4))) == Q.project(x));

  // <b> is not normal: b^a = a^4 b falls outside
  CHECK_FALSE(is_normal(G, closure(G, {b})));
  CHECK_THROWS_AS(quotient(G, closure(G, {b})), NotNormal);

  // element orders partition correctly
  std::vector<int> hist(5, 0);
  for (u32 x = 0; x < G.order(); ++x) {
    i64 o = G.order_of(x);
    int e = 0;
    while (o > 1) o /= 2, ++e;
    ++hist[e];
  }
  CHECK(hist == std::vector<int>{1, 3, 4, 8, 0});

  // quotient by the full group and by the trivial subgroup
  CHECK(quotient(G, full_subgroup(G)).order() == 1);
  CHECK(quotient(G, trivial_subgroup()).order() == 16);
  CHECK(pc.prime() == 2);
}

TEST_CASE("heisenberg group structure at p = 3") {
  const PcGroup G(heis(3));
  CHECK(G.order() == 27);
  CHECK(exponent_exp(G) == 1);
  CHECK(center(G).order() == 3);
  CHECK(derived_subgroup(G).order() == 3);
  CHECK(center(G) == derived_subgroup(G));
  CHECK_FALSE(is_abelian(G));
  CHECK(omega(G, 1).order() == 27);
  CHECK(agemo(G, 1).order() == 1);
}

TEST_CASE("subgroup helpers") {
  const PcGroup G(mod16());
  const Subgroup T = trivial_subgroup();
  CHECK(T.order() == 1);
  CHECK(T.contains(0));
  CHECK_FALSE(T.contains(1));
  const Subgroup F = full_subgroup(G);
  CHECK(F.order() == 16);
  const Subgroup C = closure(G, {});
  CHECK(C.order() == 1);
}

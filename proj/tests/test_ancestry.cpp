// Descriptor parsing, symbolic descendants, ancestor enumeration and its
// inversion property, concrete quotient checks, and edge audits.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pnil/ancestry.hpp"
#include "pnil/props.hpp"

using namespace pnil;
using namespace pnil::ancestry;
using rank2::type_one;
using rank2::type_two;

TEST_CASE("descriptor labels and parsing") {
  CHECK(abelian_a(2).label() == "A(2)");
  CHECK(abelian_b(1).label() == "B(1)");
  CHECK(abelian_desc(4, 2).label() == "Ab(4,2)");
  CHECK(abelian_desc(2, 4) == abelian_desc(4, 2));  // normalized n1 >= n2
  CHECK(rank2_desc(type_one(3, 2, 2)).label() == "G(3,2,2)");

  CHECK(parse_descriptor("A(2)") == abelian_a(2));
  CHECK(parse_descriptor("B(1)") == abelian_b(1));
  CHECK(parse_descriptor("Ab(4,2)") == abelian_desc(4, 2));
  CHECK(parse_descriptor("G(3,2,2)") == rank2_desc(type_one(3, 2, 2)));
  CHECK(parse_descriptor("G(5,4,3,2)") == rank2_desc(type_two(5, 4, 3, 2)));
  CHECK_THROWS_AS(parse_descriptor("X(2)"), Error);
  CHECK_THROWS_AS(parse_descriptor("A(2"), Error);
  CHECK_THROWS_AS(parse_descriptor("G(3,2)"), Error);
}

TEST_CASE("symbolic descendants, one per rule") {
  auto d = descendant(type_one(3, 2, 2));
  CHECK(d.child == abelian_a(2));
  CHECK(d.rule == Rule::a);

  d = descendant(type_one(3, 1, 2));
  CHECK(d.child == abelian_b(1));
  CHECK(d.rule == Rule::b);

  d = descendant(type_one(5, 1, 4));
  CHECK(d.child == abelian_b(1));
  CHECK(d.rule == Rule::b);

  d = descendant(type_one(4, 2, 2));  // m == n - r, r too small for abelian
  CHECK(d.child == rank2_desc(type_one(3, 2, 2)));
  CHECK(d.rule == Rule::b);

  d = descendant(type_one(4, 4, 2));
  CHECK(d.child == rank2_desc(type_one(3, 3, 2)));
  CHECK(d.rule == Rule::a);

  d = descendant(type_two(4, 4, 3, 2));  // l > n - r
  CHECK(d.child == rank2_desc(type_one(3, 3, 2)));
  CHECK(d.rule == Rule::c);

  d = descendant(type_two(5, 4, 3, 2));  // l == n - r
  CHECK(d.child == rank2_desc(type_one(3, 4, 2)));
  CHECK(d.rule == Rule::d);

  CHECK(rule_name(Rule::a) == 'a');
  CHECK(rule_name(Rule::d) == 'd');
  CHECK_THROWS_AS(descendant(type_one(3, 2, 1)), rank2::NotRank2);
}

TEST_CASE("frozen ancestor sets") {
  const std::vector<rank2::Params> anc_a2{type_one(3, 2, 2), type_one(3, 3, 2),
                                          type_one(4, 2, 3)};
  CHECK(direct_ancestors(abelian_a(2), 6) == anc_a2);
  CHECK(direct_ancestors(abelian_b(1), 4) ==
        std::vector<rank2::Params>{type_one(3, 1, 2)});
  CHECK(direct_ancestors(abelian_b(2), 7) ==
        std::vector<rank2::Params>{type_one(5, 2, 3)});
  // rule d parents form a single family with l fixed
  CHECK(direct_ancestors(rank2_desc(type_one(3, 4, 2)), 9) ==
        std::vector<rank2::Params>{type_two(5, 4, 3, 2)});
  // n == m targets collect both the a and the c family
  const auto anc = direct_ancestors(rank2_desc(type_one(3, 3, 2)), 9);
  const std::vector<rank2::Params> expect{type_one(4, 3, 2), type_one(4, 4, 2),
                                          type_one(4, 5, 2), type_two(4, 4, 3, 2),
                                          type_two(4, 5, 3, 2)};
  CHECK(anc == expect);
  // generic abelian groups have no ancestors in the family
  CHECK(direct_ancestors(abelian_desc(4, 2), 20).empty());
  // type II groups are never descendants
  CHECK(direct_ancestors(rank2_desc(type_two(5, 4, 3, 2)), 20).empty());
}

TEST_CASE("ancestors invert the descendant map") {
  // completeness: every group lists itself among its child's ancestors
  for (int x = 4; x <= 8; ++x)
    for (const auto& P : rank2::enumerate_rank2(x)) {
      const auto anc = direct_ancestors(descendant(P).child, x);
      CHECK(std::find(anc.begin(), anc.end(), P) != anc.end());
    }
  // soundness: every listed ancestor maps back to the target
  const std::vector<GroupDescriptor> targets{
      abelian_a(2),  abelian_a(3),  abelian_b(1),
      abelian_b(2),  rank2_desc(type_one(3, 3, 2)),
      rank2_desc(type_one(3, 4, 2)), rank2_desc(type_one(4, 3, 2))};
  for (const auto& t : targets)
    for (const auto& P : direct_ancestors(t, 11)) {
      CHECK(rank2::validate(P));
      CHECK(descendant(P).child == t);
    }
}

TEST_CASE("concrete quotients match the symbolic descendant") {
  for (i64 p : {2, 3}) {
    const auto chk = verify_descendant(type_one(3, 2, 2), p);
    CHECK(chk.ok);
    CHECK(chk.rule == Rule::a);
    CHECK(chk.symbolic == abelian_a(2));
    CHECK(chk.zp_order == static_cast<u64>(p));
  }
  const auto b1 = verify_descendant(type_one(3, 1, 2), 2);
  CHECK(b1.ok);
  CHECK(b1.rule == Rule::b);
  CHECK(b1.symbolic == abelian_b(1));

  const auto b2 = verify_descendant(type_one(4, 2, 2), 3);
  CHECK(b2.ok);
  CHECK(b2.rule == Rule::b);
  CHECK(b2.concrete == rank2_desc(type_one(3, 2, 2)));
  CHECK(b2.zp_order == 3);

  const auto c = verify_descendant(type_two(4, 4, 3, 2), 2);
  CHECK(c.ok);
  CHECK(c.rule == Rule::c);
  CHECK(c.concrete == rank2_desc(type_one(3, 3, 2)));

  const auto d = verify_descendant(type_two(5, 4, 3, 2), 3);
  CHECK(d.ok);
  CHECK(d.rule == Rule::d);
  CHECK(d.concrete == rank2_desc(type_one(3, 4, 2)));
  CHECK(d.zp_order == 9);  // Z is cyclic of order p^3 here
}

TEST_CASE("center power subgroup") {
  const auto cp = center_pow(type_one(4, 2, 2), 3);
  const u32 a = cp.group.gen(1);
  CHECK(cp.zp == closure(cp.group, {cp.group.power(a, 27)}));
  CHECK(cp.zp.order() == 3);
  CHECK(is_normal(cp.group, cp.zp));
}

TEST_CASE("infinite branch above A(nbar)") {
  const auto br = infinite_branch(2, 2, 3);
  const std::vector<GroupDescriptor> expect{
      abelian_a(2), rank2_desc(type_one(3, 3, 2)), rank2_desc(type_one(4, 4, 2)),
      rank2_desc(type_one(5, 5, 2))};
  CHECK(br == expect);
  // every edge of this branch holds
  for (std::size_t k = 1; k < br.size(); ++k)
    CHECK(descendant(br[k].params).child == br[k - 1]);

  // r < nbar: the first edge fails, later edges still hold
  const auto bad = infinite_branch(3, 2, 2);
  CHECK(bad[0] == abelian_a(3));
  CHECK(bad[1] == rank2_desc(type_one(4, 4, 2)));
  CHECK(descendant(bad[1].params).child != bad[0]);
  CHECK(descendant(bad[2].params).child == bad[1]);

  // r == nbar restores the first edge
  const auto good = infinite_branch(3, 3, 1);
  CHECK(good[1] == rank2_desc(type_one(5, 5, 3)));
  CHECK(descendant(good[1].params).child == good[0]);

  CHECK_THROWS_AS(infinite_branch(1, 2, 1), Error);
  CHECK_THROWS_AS(infinite_branch(2, 1, 1), Error);
}

TEST_CASE("edge audits: class step and coclass rule") {
  const auto a1 = audit_edge(type_one(3, 2, 2), 3);
  CHECK(a1.parent_class == 2);
  CHECK(a1.child_class == 1);
  CHECK(a1.parent_coclass == 3);
  CHECK(a1.child_coclass == 3);
  CHECK(a1.zp_order == 3);
  CHECK(a1.class_step_ok);
  CHECK(a1.coclass_rule_ok);

  const auto a2 = audit_edge(type_two(5, 4, 3, 2), 3);
  CHECK(a2.parent_class == 3);
  CHECK(a2.child_class == 2);
  CHECK(a2.parent_coclass == 6);
  CHECK(a2.child_coclass == 5);  // coclass drops: |Z^p| = p^2
  CHECK(a2.zp_order == 9);
  CHECK(a2.class_step_ok);
  CHECK(a2.coclass_rule_ok);

  const auto a3 = audit_edge(type_one(3, 1, 2), 2);
  CHECK(a3.parent_class == 2);
  CHECK(a3.child_class == 1);
  CHECK(a3.zp_order == 2);
  CHECK(a3.class_step_ok);
  CHECK(a3.coclass_rule_ok);
}

// Ancestry structure on rank-2 groups: each G maps to the quotient by
// Z(G)^p (its descendant); going the other way enumerates its ancestors.
#pragma once

#include <string>
#include <vector>

#include "pnil/group.hpp"
#include "pnil/rank2.hpp"

namespace pnil::ancestry {

enum class Kind { abelian, rank2 };

// Either C_{p^n1} x C_{p^n2} with n1 >= n2, or a rank-2 parameter tuple.
struct GroupDescriptor {
  Kind kind = Kind::abelian;
  int n1 = 0;
  int n2 = 0;
  rank2::Params params;

  std::string label() const;
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor abelian_desc(int n1, int n2);
GroupDescriptor abelian_a(int nbar);  // A(nbar) = C_{p^nbar} x C_{p^nbar}
GroupDescriptor abelian_b(int nbar);  // B(nbar) = C_{p^{nbar+1}} x C_{p^nbar}
GroupDescriptor rank2_desc(const rank2::Params& P);
// Accepts the label forms A(2), B(1), Ab(4,2), G(3,2,2), G(5,4,3,2).
GroupDescriptor parse_descriptor(const std::string& text);

// Which of the four quotient cases applied.
enum class Rule { a, b, c, d };
char rule_name(Rule r);

struct Descendant {
  GroupDescriptor child;
  Rule rule = Rule::a;
};

// Isomorphism type of G/Z(G)^p, computed symbolically from the parameters.
Descendant descendant(const rank2::Params& P);

struct CenterPow {
  PcGroup group;
  Subgroup zp;  // Z(G)^p
};

CenterPow center_pow(const rank2::Params& P, i64 p);

// All valid parameter tuples of order exponent <= max_order_exp whose
// descendant is the target (closed-form families).
std::vector<rank2::Params> direct_ancestors(const GroupDescriptor& target,
                                            int max_order_exp);

// [A(nbar), G(nbar+(r-1), ., r), G(nbar+2(r-1), ., r), ...]: the canonical
// branch of C-shaped groups above A(nbar), depth entries past the root.
std::vector<GroupDescriptor> infinite_branch(int nbar, int r, int depth);

struct DescendantCheck {
  rank2::Params parent;
  Rule rule = Rule::a;
  GroupDescriptor symbolic;
  GroupDescriptor concrete;
  u64 zp_order = 0;
  bool ok = false;
};

// Builds the group, quotients by the computed Z(G)^p, reads the quotient's
// isomorphism type off the group itself, and compares with descendant().
DescendantCheck verify_descendant(const rank2::Params& P, i64 p);

struct EdgeAudit {
  int parent_class = 0;
  int child_class = 0;
  int parent_coclass = 0;
  int child_coclass = 0;
  u64 zp_order = 0;
  bool class_step_ok = false;
  bool coclass_rule_ok = false;
};

// Class drops by exactly one along an edge; coclass is preserved exactly
// when |Z(G)^p| = p.
EdgeAudit audit_edge(const rank2::Params& P, i64 p);

}  // namespace pnil::ancestry

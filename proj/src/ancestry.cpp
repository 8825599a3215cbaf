#include "pnil/ancestry.hpp"

#include <algorithm>

#include "pnil/props.hpp"

namespace pnil::ancestry {

std::string GroupDescriptor::label() const {
  if (kind == Kind::rank2) return params.label();
  if (n1 == n2) return "A(" + std::to_string(n1) + ")";
  if (n1 == n2 + 1) return "B(" + std::to_string(n2) + ")";
  return "Ab(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

GroupDescriptor abelian_desc(int n1, int n2) {
  if (n1 < n2) std::swap(n1, n2);
  GroupDescriptor d;
  d.kind = Kind::abelian;
  d.n1 = n1;
  d.n2 = n2;
  return d;
}

GroupDescriptor abelian_a(int nbar) { return abelian_desc(nbar, nbar); }

GroupDescriptor abelian_b(int nbar) { return abelian_desc(nbar + 1, nbar); }

GroupDescriptor rank2_desc(const rank2::Params& P) {
  GroupDescriptor d;
  d.kind = Kind::rank2;
  d.params = P;
  return d;
}

GroupDescriptor parse_descriptor(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw Error("cannot parse group descriptor: " + text);
  const std::string head = text.substr(0, open);
  std::vector<int> args;
  std::size_t pos = open + 1;
  while (pos < text.size() - 1) {
    std::size_t used = 0;
    args.push_back(std::stoi(text.substr(pos), &used));
    pos += used;
    if (pos < text.size() - 1) {
      if (text[pos] != ',') throw Error("cannot parse group descriptor: " + text);
      ++pos;
    }
  }
  if (head == "A" && args.size() == 1) return abelian_a(args[0]);
  if (head == "B" && args.size() == 1) return abelian_b(args[0]);
  if (head == "Ab" && args.size() == 2) return abelian_desc(args[0], args[1]);
  if (head == "G" && args.size() == 3)
    return rank2_desc(rank2::type_one(args[0], args[1], args[2]));
  if (head == "G" && args.size() == 4)
    return rank2_desc(rank2::type_two(args[0], args[1], args[2], args[3]));
  throw Error("cannot parse group descriptor: " + text);
}

char rule_name(Rule r) {
  switch (r) {
    case Rule::a: return 'a';
    case Rule::b: return 'b';
    case Rule::c: return 'c';
    case Rule::d: return 'd';
  }
  return '?';
}

Descendant descendant(const rank2::Params& P) {
  if (!rank2::validate(P))
    throw rank2::NotRank2("descendant of invalid parameters");
  const int n = P.n, m = P.m, r = P.r;
  const int nr = n - r;
  if (P.variant == rank2::Variant::type_one) {
    if (m > nr) {
      if (r >= nr + 1) return {abelian_a(nr + 1), Rule::a};
      return {rank2_desc(rank2::type_one(nr + 1, nr + 1, r)), Rule::a};
    }
    // validity forces m >= n - r, so here m == n - r
    if (r >= nr + 1) return {abelian_b(nr), Rule::b};
    return {rank2_desc(rank2::type_one(nr + 1, nr, r)), Rule::b};
  }
  if (P.l > nr) {
    if (r >= nr + 1) return {abelian_a(nr + 1), Rule::c};
    return {rank2_desc(rank2::type_one(nr + 1, nr + 1, r)), Rule::c};
  }
  // validity forces l >= n - r, so here l == n - r (and then 2r < n)
  return {rank2_desc(rank2::type_one(nr, nr + 1, r)), Rule::d};
}

CenterPow center_pow(const rank2::Params& P, i64 p) {
  PcGroup G = rank2::build_group(P, p);
  const Subgroup Z = center(G);
  Subgroup zp = subgroup_agemo(G, Z, 1);
  return CenterPow{std::move(G), std::move(zp)};
}

std::vector<rank2::Params> direct_ancestors(const GroupDescriptor& target,
                                            int max_order_exp) {
  std::vector<rank2::Params> out;
  auto keep = [&](const rank2::Params& P) {
    if (P.order_exp() <= max_order_exp && rank2::validate(P)) out.push_back(P);
  };

  if (target.kind == Kind::abelian) {
    if (target.n1 == target.n2 && target.n1 >= 2) {
      const int nb = target.n1;  // A(nb), reached by rules a and c
      for (int r = nb; ; ++r) {
        const int n = nb + r - 1;
        if (n + nb > max_order_exp) break;
        for (int m = nb; n + m <= max_order_exp; ++m) keep(rank2::type_one(n, m, r));
        for (int l = r + 1; l <= r + nb - 2; ++l)
          for (int m = l + 1; n + m <= max_order_exp; ++m)
            keep(rank2::type_two(n, m, l, r));
      }
    } else if (target.n1 == target.n2 + 1 && target.n2 >= 1) {
      const int nb = target.n2;  // B(nb), reached by rule b
      for (int r = nb + 1; nb + r + nb <= max_order_exp; ++r)
        keep(rank2::type_one(nb + r, nb, r));
    }
    // other abelian groups are not descendants of anything in the family
  } else if (target.params.variant == rank2::Variant::type_one) {
    const auto& T = target.params;
    if (T.n == T.m) {
      // rules a and c with the nonabelian branch: same r, n = T.n + r - 1
      const int n = T.n + T.r - 1;
      for (int m = T.n; n + m <= max_order_exp; ++m)
        keep(rank2::type_one(n, m, T.r));
      for (int l = std::max(T.r + 1, T.n); l <= T.r + T.n - 2; ++l)
        for (int m = l + 1; n + m <= max_order_exp; ++m)
          keep(rank2::type_two(n, m, l, T.r));
    } else if (T.n == T.m + 1) {
      // rule b, nonabelian branch: single parameter point
      keep(rank2::type_one(T.m + T.r, T.m, T.r));
    } else if (T.m == T.n + 1) {
      // rule d: type II parents with l = T.n
      const int n = T.n + T.r;
      for (int m = T.n + 1; n + m <= max_order_exp; ++m)
        keep(rank2::type_two(n, m, T.n, T.r));
    }
  }
  // type II targets are never descendants

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupDescriptor> infinite_branch(int nbar, int r, int depth) {
  if (nbar < 2 || r < 2 || depth < 0)
    throw Error("infinite_branch requires nbar >= 2, r >= 2, depth >= 0");
  std::vector<GroupDescriptor> out{abelian_a(nbar)};
  for (int i = 1; i <= depth; ++i) {
    const int n = nbar + i * (r - 1);
    out.push_back(rank2_desc(rank2::type_one(n, n, r)));
  }
  return out;
}

namespace {

GroupDescriptor concrete_descriptor(const GroupView& Q) {
  const Subgroup D = derived_subgroup(Q);
  if (D.order() == 1) {
    const auto sig = type_signature(Q);
    if (sig.size() == 1) return abelian_desc(sig[0], 0);
    if (sig.size() == 2) return abelian_desc(sig[1], sig[0]);
    throw Error("quotient is abelian of rank greater than 2");
  }
  return rank2_desc(rank2::structure_invariants(Q));
}

}  // namespace

DescendantCheck verify_descendant(const rank2::Params& P, i64 p) {
  DescendantCheck out;
  out.parent = P;
  const Descendant sym = descendant(P);
  out.rule = sym.rule;
  out.symbolic = sym.child;

  const CenterPow cp = center_pow(P, p);
  out.zp_order = cp.zp.order();
  const QuotientGroup Q = quotient(cp.group, cp.zp);
  out.concrete = concrete_descriptor(Q);
  out.ok = out.concrete == out.symbolic;
  return out;
}

EdgeAudit audit_edge(const rank2::Params& P, i64 p) {
  EdgeAudit a;
  const CenterPow cp = center_pow(P, p);
  a.zp_order = cp.zp.order();
  const QuotientGroup Q = quotient(cp.group, cp.zp);
  a.parent_class = pn_class(cp.group);
  a.child_class = pn_class(Q);
  a.parent_coclass = order_exp_of(cp.group) - a.parent_class;
  a.child_coclass = order_exp_of(Q) - a.child_class;
  a.class_step_ok = a.child_class == a.parent_class - 1;
  a.coclass_rule_ok = (a.parent_coclass == a.child_coclass) ==
                      (a.zp_order == static_cast<u64>(p));
  return a;
}

}  // namespace pnil::ancestry

#include "pnil/rank2.hpp"

#include <algorithm>

#include "pnil/props.hpp"

namespace pnil::rank2 {

std::string Params::label() const {
  std::string s = "G(" + std::to_string(n) + "," + std::to_string(m) + ",";
  if (variant == Variant::type_two) s += std::to_string(l) + ",";
  s += std::to_string(r) + ")";
  return s;
}

Params type_one(int n, int m, int r) {
  return Params{Variant::type_one, n, m, r, 0};
}

Params type_two(int n, int m, int l, int r) {
  return Params{Variant::type_two, n, m, r, l};
}

bool validate(const Params& P) {
  if (P.n < 1 || P.m < 1) return false;
  if (P.variant == Variant::type_one)
    return P.l == 0 && 2 <= P.r && P.r <= P.n - 1 && P.n - P.r <= P.m;
  return 2 <= P.r && P.r < P.l && P.l <= P.n - 1 && P.n - P.r <= P.l &&
         P.l < P.m;
}

PcGroup build_group(const Params& P, i64 p) {
  if (!validate(P)) throw NotRank2("parameters outside the classified ranges");
  std::vector<PcGenerator> gens{{"b", P.m}, {"a", P.n}};
  Word b_power;
  if (P.variant == Variant::type_two) b_power = Word{{1, ipow(p, P.l)}};
  std::vector<Word> powers{std::move(b_power), Word{}};
  std::map<std::pair<int, int>, Word> conj{
      {{0, 1}, Word{{1, 1 + ipow(p, P.r)}}}};
  return PcGroup(PcPresentation(p, std::move(gens), std::move(powers),
                                std::move(conj)));
}

namespace {

int log_prime(const GroupView& G, u64 n) {
  int e = 0;
  while (n > 1) {
    n /= static_cast<u64>(G.prime());
    ++e;
  }
  return e;
}

Subgroup power_ladder(const GroupView& G, int k) {
  std::vector<u32> gens;
  const i64 q = ipow(G.prime(), k);
  for (u32 g : G.generators()) gens.push_back(G.power(g, q));
  return closure(G, std::move(gens));
}

bool subset(const Subgroup& inner, const Subgroup& outer) {
  return std::includes(outer.elements.begin(), outer.elements.end(),
                       inner.elements.begin(), inner.elements.end());
}

}  // namespace

Params structure_invariants(const GroupView& G) {
  const i64 p = G.prime();
  const int x = order_exp_of(G);

  const Subgroup D = derived_subgroup(G);
  if (D.order() == 1) throw NotRank2("group is abelian");

  // Frattini subgroup = <generator p-th powers, [G,G]> since the quotient by
  // the derived subgroup is abelian.
  std::vector<u32> fgens;
  for (u32 g : G.generators()) fgens.push_back(G.power(g, p));
  for (u32 d : D.generating_set) fgens.push_back(d);
  const Subgroup Phi = closure(G, std::move(fgens));
  if (G.order() != Phi.order() * static_cast<u64>(p) * static_cast<u64>(p))
    throw NotRank2("group is not 2-generated");

  // For these groups G^{p^k} = <g^{p^k} : g generator>; r is the last rung of
  // the ladder still containing the derived subgroup.
  int r = 0;
  for (int k = 1; k <= x; ++k) {
    if (!subset(D, power_ladder(G, k))) break;
    r = k;
  }
  if (r == 0) throw NotRank2("derived subgroup not contained in G^p");

  const int n = r + log_prime(G, D.order());
  const int m = x - n;
  if (m < 1) throw NotRank2("inconsistent power ladder");

  const Subgroup Am = power_ladder(G, m);
  const int am_exp = log_prime(G, Am.order());
  if (am_exp > std::max(n - m, 0)) {
    const int l = n - am_exp;
    return Params{Variant::type_two, n, m, r, l};
  }
  return Params{Variant::type_one, n, m, r, 0};
}

std::vector<Params> enumerate_rank2(int x) {
  std::vector<Params> out;
  for (int n = 3; n <= x - 1; ++n) {
    const int m = x - n;
    for (int r = 2; r <= n - 1; ++r) {
      if (n - r <= m) out.push_back(type_one(n, m, r));
      for (int l = r + 1; l <= n - 1; ++l)
        if (n - r <= l && l < m) out.push_back(type_two(n, m, l, r));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CountBreakdown count_brute(int x) {
  CountBreakdown c;
  c.x = x;
  for (int m = 1; 2 * m <= x; ++m) ++c.abelian;
  for (int n = 3; n <= x - 1; ++n) {
    const int m = x - n;
    for (int r = 2; r <= n - 1; ++r) {
      if (n - r <= m) ++c.type_one;
      for (int l = r + 1; l <= n - 1; ++l)
        if (n - r <= l && l < m) ++c.type_two;
    }
  }
  c.total = c.abelian + c.type_one + c.type_two;
  return c;
}

i64 type2_closed_display(int x) {
  if (x < 8) return 0;
  const i64 f2 = (x - 6) / 2;
  const i64 f3 = (x - 6) / 3;
  const i64 g2 = (x - 4) / 2;
  const i64 g3 = (x - 3) / 3;
  // All six terms carried exactly in units of 1/12.
  i64 twelfths = 0;
  twelfths += f2 * (x - 6) * (7 - x) * 6;
  twelfths += f2 * g2 * (3 * x - 18) * 6;
  twelfths += -8 * f2 * g2 * (2 * f2 + 1);
  twelfths += f3 * (x - 6) * (x - 7) * 6;
  twelfths += 3 * f3 * g3 * (-6 * x + 39);
  twelfths += 9 * f3 * g3 * (2 * f3 + 1);
  if (twelfths % 12 != 0) throw Error("type II closed form is not an integer");
  return twelfths / 12;
}

CountBreakdown count_closed(int x) {
  if (x < 4) throw Error("closed-form counts require order exponent >= 4");
  CountBreakdown c;
  c.x = x;
  c.abelian = x / 2;
  if (x % 2 == 0) {
    const i64 h = (x - 2) / 2;
    c.type_one = h * h;
  } else {
    c.type_one = static_cast<i64>(x - 3) * (x - 1) / 4;
  }
  c.type_two = type2_closed_display(x);
  static constexpr i64 kTail[6] = {216, 200, 208, 216, 200, 208};
  const i64 xi = x;
  const i64 num = xi * xi * xi + 12 * xi * xi + (x % 2 == 0 ? -60 : -69) * xi +
                  kTail[x % 6];
  if (num % 72 != 0) throw Error("total closed form is not an integer");
  c.total = num / 72;
  if (c.total != c.abelian + c.type_one + c.type_two)
    throw Error("closed-form counts disagree with their own total");
  return c;
}

ErratumReport shadow_check_type2(int lo, int hi) {
  ErratumReport rep;
  for (int x = std::max(lo, 4); x <= hi; ++x) {
    const i64 d = type2_closed_display(x);
    const i64 b = count_brute(x).type_two;
    if (d != b) {
      rep.display_matches_enumeration = false;
      rep.mismatches.push_back({x, d, b});
    }
  }
  return rep;
}

}  // namespace pnil::rank2

#include "pnil/catalog.hpp"

#include <algorithm>

#include "pnil/props.hpp"

namespace pnil::catalog {

PcPresentation refine_class2(const MinimalPresentation& mp) {
  const i64 p = mp.p;
  const int k = static_cast<int>(mp.generators.size());

  struct LayerGen {
    int orig;
    int layer;
  };
  std::vector<LayerGen> order;
  for (int i = 0; i < k; ++i) order.push_back({i, 0});
  std::vector<LayerGen> high;
  for (int i = 0; i < k; ++i)
    for (int l = 1; l < mp.generators[i].order_exp; ++l) high.push_back({i, l});
  std::sort(high.begin(), high.end(), [](const LayerGen& a, const LayerGen& b) {
    return std::pair(a.layer, a.orig) < std::pair(b.layer, b.orig);
  });
  order.insert(order.end(), high.begin(), high.end());

  std::vector<std::vector<int>> pos(k);
  for (int i = 0; i < k; ++i) pos[i].resize(mp.generators[i].order_exp, -1);
  for (int u = 0; u < static_cast<int>(order.size()); ++u)
    pos[order[u].orig][order[u].layer] = u;

  std::vector<PcGenerator> gens;
  std::vector<Word> powers;
  for (const auto& lg : order) {
    std::string name = mp.generators[lg.orig].name;
    if (lg.layer > 0) name += "_" + std::to_string(lg.layer);
    gens.push_back({name, 1});
    if (lg.layer + 1 < mp.generators[lg.orig].order_exp)
      powers.push_back(Word{{pos[lg.orig][lg.layer + 1], 1}});
    else
      powers.push_back(Word{});
  }

  std::map<std::pair<int, int>, Word> conj;
  const int total = static_cast<int>(order.size());
  for (int u = 0; u < total; ++u) {
    for (int v = u + 1; v < total; ++v) {
      const auto [oi, ku] = order[u];
      const auto [oj, kv] = order[v];
      if (oi == oj) continue;  // same tower, commutes
      const auto key = std::pair(std::min(oi, oj), std::max(oi, oj));
      const auto it = mp.commutators.find(key);
      if (it == mp.commutators.end()) continue;
      // g_v^{g_u} = g_v [g_v, g_u]; in class 2, [x^{p^a}, y^{p^b}] =
      // [x,y]^{p^{a+b}}, and the stored word is [g_min, g_max].
      const i64 sign = oi < oj ? -1 : 1;
      const i64 scale = ipow(p, ku + kv);
      std::vector<i64> contrib(k, 0);
      for (const auto& syl : it->second) {
        const i64 mod = ipow(p, mp.generators[syl.gen].order_exp);
        i64 add = ((syl.exp % mod) * sign) % mod;
        add = (add * (scale % mod)) % mod;
        contrib[syl.gen] = (contrib[syl.gen] + add) % mod;
      }
      Word w{{v, 1}};
      for (int c = 0; c < k; ++c) {
        i64 value = contrib[c] % ipow(p, mp.generators[c].order_exp);
        if (value < 0) value += ipow(p, mp.generators[c].order_exp);
        for (int t = 0; t < mp.generators[c].order_exp && value > 0; ++t) {
          const i64 digit = value % p;
          value /= p;
          if (digit != 0) w.push_back({pos[c][t], digit});
        }
      }
      if (w.size() == 1) continue;
      std::sort(w.begin(), w.end(),
                [](const Syllable& a, const Syllable& b) { return a.gen < b.gen; });
      conj[{u, v}] = std::move(w);
    }
  }

  return PcPresentation(p, std::move(gens), std::move(powers), std::move(conj));
}

PcGroup CatalogEntry::build() const {
  if (family == Family::rank_two) return rank2::build_group(params, p);
  return PcGroup(refine_class2(minimal));
}

namespace {

const char* kLetters[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

}  // namespace

MinimalPresentation abelian_presentation(i64 p, std::vector<int> invariants) {
  std::sort(invariants.rbegin(), invariants.rend());
  if (invariants.size() > 8) throw Error("too many abelian invariants");
  MinimalPresentation mp;
  mp.p = p;
  for (std::size_t i = 0; i < invariants.size(); ++i)
    mp.generators.push_back({kLetters[i], invariants[i]});
  return mp;
}

MinimalPresentation family_a_presentation(i64 p, int n, int t, int s) {
  if (n < 2 || t < 2 || s < 1 || 2 * s > t)
    throw Error("family A parameters out of range");
  MinimalPresentation mp;
  mp.p = p;
  for (int i = 1; i <= t; ++i) mp.generators.push_back({"a" + std::to_string(i), 1});
  mp.generators.push_back({"b", n});
  const i64 q = ipow(p, n - 1);
  for (int i = 1; i <= s; ++i)
    mp.commutators[{2 * i - 2, 2 * i - 1}] = Word{{t, q}};
  return mp;
}

MinimalPresentation family_b_presentation(i64 p, int n, int t, int s) {
  if (n < 3 || t < 1 || s < 0 || 2 * s + 1 > t)
    throw Error("family B parameters out of range");
  MinimalPresentation mp;
  mp.p = p;
  for (int i = 1; i <= t; ++i) mp.generators.push_back({"a" + std::to_string(i), 1});
  mp.generators.push_back({"b", n});
  const i64 q = ipow(p, n - 1);
  for (int i = 1; i <= s; ++i)
    mp.commutators[{2 * i - 2, 2 * i - 1}] = Word{{t, q}};
  mp.commutators[{2 * s, t}] = Word{{t, q}};
  return mp;
}

MinimalPresentation e9_lambda_presentation(i64 p, i64 lambda) {
  lambda %= p;
  if (lambda < 0) lambda += p;
  if (lambda == 0) throw Error("lambda must be a unit mod p");
  MinimalPresentation mp;
  mp.p = p;
  mp.generators = {{"a", 1}, {"b", 2}, {"c", 3}};
  mp.commutators[{0, 1}] = Word{{2, p * p * lambda}};
  mp.commutators[{0, 2}] = Word{{1, p}};
  return mp;
}

MinimalPresentation family_e_presentation(i64 p, int index) {
  MinimalPresentation mp;
  mp.p = p;
  const i64 p2 = p * p;
  switch (index) {
    case 1:
      mp.generators = {{"a", 1}, {"b", 2}, {"c", 2}};
      mp.commutators[{0, 1}] = Word{{2, p}};
      return mp;
    case 2:
      mp.generators = {{"a", 2}, {"b", 2}, {"c", 2}};
      mp.commutators[{0, 1}] = Word{{2, p}};
      return mp;
    case 3:
      mp.generators = {{"a", 1}, {"b", 2}, {"c", 3}};
      mp.commutators[{1, 2}] = Word{{2, p2}};
      return mp;
    case 4:
      mp.generators = {{"a", 1}, {"b", 2}, {"c", 3}};
      mp.commutators[{0, 2}] = Word{{2, p2}};
      return mp;
    case 5:
      mp.generators = {{"a", 1}, {"b", 2}, {"c", 3}};
      mp.commutators[{0, 1}] = Word{{2, p2}};
      return mp;
    case 6:
      mp.generators = {{"a", 1}, {"b", 2}, {"c", 3}};
      mp.commutators[{0, 2}] = Word{{1, p}};
      return mp;
    case 7:
      mp.generators = {{"a", 1}, {"b", 2}, {"c", 3}};
      mp.commutators[{0, 2}] = Word{{1, p}};
      mp.commutators[{1, 2}] = Word{{2, p2}};
      return mp;
    case 8:
      return e9_lambda_presentation(p, 1);
    case 9:
      return e9_lambda_presentation(p, least_nonsquare(p));
    case 10:
      mp.generators = {{"a", 1}, {"b", 1}, {"c", 2}, {"d", 2}};
      mp.commutators[{0, 1}] = Word{{2, p}};
      return mp;
    case 11:
      mp.generators = {{"a", 1}, {"b", 1}, {"c", 2}, {"d", 2}};
      mp.commutators[{1, 2}] = Word{{3, p}};
      return mp;
    case 12:
      mp.generators = {{"a", 1}, {"b", 1}, {"c", 2}, {"d", 2}};
      mp.commutators[{0, 1}] = Word{{2, p}};
      mp.commutators[{0, 2}] = Word{{3, p}};
      return mp;
    default:
      throw Error("family E index must be 1..12");
  }
}

i64 least_nonsquare(i64 p) {
  if (p == 2) throw Error("least_nonsquare requires an odd prime");
  std::vector<char> is_sq(p, 0);
  for (i64 r = 1; r < p; ++r) is_sq[(r * r) % p] = 1;
  for (i64 v = 2; v < p; ++v)
    if (!is_sq[v]) return v;
  throw Error("no nonsquare found");
}

namespace {

void partitions_desc(int rem, int maxpart, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rem, maxpart); part >= 1; --part) {
    cur.push_back(part);
    partitions_desc(rem - part, part, cur, out);
    cur.pop_back();
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

CatalogEntry minimal_entry(Family fam, std::string label, i64 p, int x,
                           std::vector<int> type, MinimalPresentation mp) {
  CatalogEntry e;
  e.family = fam;
  e.label = std::move(label);
  e.p = p;
  e.order_exp = x;
  e.type_invariants = std::move(type);
  std::sort(e.type_invariants.begin(), e.type_invariants.end());
  e.minimal = std::move(mp);
  return e;
}

}  // namespace

std::vector<CatalogEntry> catalog_for_order(i64 p, int x) {
  if (!is_prime(p)) throw Error("catalog requires a prime");
  if (x < 4 || x > 6) throw Error("catalog covers orders p^4, p^5, p^6");
  std::vector<CatalogEntry> out;

  std::vector<std::vector<int>> parts;
  std::vector<int> scratch;
  partitions_desc(x, x, scratch, parts);
  for (const auto& part : parts) {
    out.push_back(minimal_entry(Family::abelian, "Ab(" + join_ints(part) + ")",
                                p, x, part, abelian_presentation(p, part)));
  }

  for (int n = p == 2 ? 3 : 2; n <= x - 2; ++n) {
    const int t = x - n;
    if (t < 2) continue;
    for (int s = 1; 2 * s <= t; ++s) {
      std::vector<int> type(t, 1);
      type.push_back(n);
      out.push_back(minimal_entry(
          Family::family_a,
          "A(" + std::to_string(n) + "," + std::to_string(t) + "," +
              std::to_string(s) + ")",
          p, x, std::move(type), family_a_presentation(p, n, t, s)));
    }
  }

  for (int n = 3; n <= x - 2; ++n) {
    const int t = x - n;
    if (t < 2) continue;
    for (int s = 0; 2 * s + 1 <= t; ++s) {
      std::vector<int> type(t, 1);
      type.push_back(n);
      out.push_back(minimal_entry(
          Family::family_b,
          "B(" + std::to_string(n) + "," + std::to_string(t) + "," +
              std::to_string(s) + ")",
          p, x, std::move(type), family_b_presentation(p, n, t, s)));
    }
  }

  std::vector<int> e_indices;
  if (x == 5 && p != 2) e_indices = {1};
  if (x == 6) {
    if (p == 2)
      e_indices = {3, 4, 5};
    else
      e_indices = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  }
  for (int idx : e_indices) {
    MinimalPresentation mp = family_e_presentation(p, idx);
    std::vector<int> type;
    for (const auto& g : mp.generators) type.push_back(g.order_exp);
    out.push_back(minimal_entry(Family::family_e, "E" + std::to_string(idx), p,
                                x, std::move(type), std::move(mp)));
  }

  for (const auto& P : rank2::enumerate_rank2(x)) {
    CatalogEntry e;
    e.family = Family::rank_two;
    e.label = P.label();
    e.p = p;
    e.order_exp = x;
    if (P.variant == rank2::Variant::type_one)
      e.type_invariants = {std::min(P.n, P.m), std::max(P.n, P.m)};
    else
      e.type_invariants = {P.l, P.n + P.m - P.l};
    e.params = P;
    out.push_back(std::move(e));
  }

  return out;
}

Fingerprint fingerprint(const GroupView& G) {
  Fingerprint f;
  f.order_exp = order_exp_of(G);
  f.abelianization = abelian_invariants(G);

  int max_exp = 0;
  std::vector<u64> hist;
  for (u64 x = 0; x < G.order(); ++x) {
    i64 ord = G.order_of(static_cast<u32>(x));
    int e = 0;
    while (ord > 1) {
      ord /= G.prime();
      ++e;
    }
    if (e >= static_cast<int>(hist.size())) hist.resize(e + 1, 0);
    ++hist[e];
    max_exp = std::max(max_exp, e);
  }
  f.order_histogram = std::move(hist);
  f.exponent_exp = max_exp;

  const Subgroup Z = center(G);
  auto log_p = [&](u64 n) {
    int e = 0;
    while (n > 1) {
      n /= static_cast<u64>(G.prime());
      ++e;
    }
    return e;
  };
  f.center_exp = log_p(Z.order());
  f.center_pow_exp = log_p(subgroup_agemo(G, Z, 1).order());
  f.derived_exp = log_p(derived_subgroup(G).order());

  for (int j = 0;; ++j) {
    const int e = log_p(agemo(G, j).order());
    f.agemo_exps.push_back(e);
    if (e == 0) break;
  }
  for (int j = 1; j <= max_exp; ++j)
    f.omega_exps.push_back(log_p(omega(G, j).order()));

  if (is_powerful(G)) {
    const auto series = upper_series(G);
    if (series.back().order() == G.order()) {
      f.pn_class = static_cast<int>(series.size()) - 1;
      f.pn_coclass = f.order_exp - f.pn_class;
    }
  }
  f.type_sig = type_signature(G);
  return f;
}

}  // namespace pnil::catalog

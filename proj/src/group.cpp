#include "pnil/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pnil {

u32 GroupView::conjugate(u32 x, u32 y) const { return mul(mul(inv(y), x), y); }

u32 GroupView::commutator(u32 x, u32 y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

u32 GroupView::power(u32 x, i64 n) const {
  if (n < 0) return power(inv(x), -n);
  u32 acc = 0;
  u32 base = x;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return acc;
}

i64 GroupView::order_of(u32 x) const {
  i64 ord = 1;
  u32 cur = x;
  while (cur != 0) {
    cur = power(cur, prime());
    ord *= prime();
    if (ord > static_cast<i64>(order()))
      throw Error("order_of: element order exceeds group order");
  }
  return ord;
}

PcGroup::PcGroup(PcPresentation pc) : pc_(std::move(pc)) {
  const int k = pc_.count();
  if (pc_.order() > (u64(1) << 31))
    throw PresentationError("group order exceeds index range");
  stride_.assign(k, 1);
  for (int i = k - 2; i >= 0; --i)
    stride_[i] = stride_[i + 1] * static_cast<u64>(pc_.rel_order(i + 1));
}

u32 PcGroup::index_of(const Element& x) const {
  u64 idx = 0;
  for (int i = 0; i < pc_.count(); ++i)
    idx += static_cast<u64>(x.e[i]) * stride_[i];
  return static_cast<u32>(idx);
}

Element PcGroup::element_of(u32 idx) const {
  Element x = identity(pc_);
  for (int i = 0; i < pc_.count(); ++i)
    x.e[i] = static_cast<i64>((idx / stride_[i]) % static_cast<u64>(pc_.rel_order(i)));
  return x;
}

u32 PcGroup::gen(int i) const { return static_cast<u32>(stride_.at(i)); }

u32 PcGroup::mul(u32 a, u32 b) const {
  if (!table_.empty()) return table_[static_cast<u64>(a) * order() + b];
  return index_of(multiply(pc_, element_of(a), element_of(b)));
}

u32 PcGroup::inv(u32 a) const {
  return index_of(inverse(pc_, element_of(a)));
}

std::vector<u32> PcGroup::generators() const {
  std::vector<u32> g(pc_.count());
  for (int i = 0; i < pc_.count(); ++i) g[i] = gen(i);
  return g;
}

void PcGroup::cache_mul_table() const {
  if (!table_.empty()) return;
  const u64 n = order();
  if (n > 4096) throw Error("multiplication table too large to cache");
  std::vector<Element> el(n);
  for (u64 x = 0; x < n; ++x) el[x] = element_of(static_cast<u32>(x));
  table_.resize(n * n);
  for (u64 a = 0; a < n; ++a)
    for (u64 b = 0; b < n; ++b)
      table_[a * n + b] = index_of(multiply(pc_, el[a], el[b]));
}

ConsistencyReport PcGroup::consistency_check() const {
  const u64 n = order();
  const int k = pc_.count();

  std::vector<std::vector<u32>> T(k, std::vector<u32>(n));
  for (int i = 0; i < k; ++i) {
    const Element gi = generator_element(pc_, i);
    std::vector<char> seen(n, 0);
    for (u64 x = 0; x < n; ++x) {
      u32 y = index_of(multiply(pc_, element_of(static_cast<u32>(x)), gi));
      T[i][x] = y;
      if (seen[y])
        return {false, "right multiplication by " + pc_.name(i) + " is not bijective"};
      seen[y] = 1;
    }
  }

  auto perm_pow = [n](const std::vector<u32>& P, i64 m) {
    std::vector<u32> R(n);
    std::vector<char> vis(n, 0);
    std::vector<u32> cyc;
    for (u64 s = 0; s < n; ++s) {
      if (vis[s]) continue;
      cyc.clear();
      u32 c = static_cast<u32>(s);
      do {
        vis[c] = 1;
        cyc.push_back(c);
        c = P[c];
      } while (c != s);
      const i64 len = static_cast<i64>(cyc.size());
      const i64 shift = m % len;
      for (i64 t = 0; t < len; ++t)
        R[cyc[t]] = cyc[(t + shift) % len];
    }
    return R;
  };

  auto word_perm = [&](const Word& w) {
    std::vector<u32> R(n);
    std::iota(R.begin(), R.end(), 0u);
    for (const auto& s : w) {
      std::vector<u32> Pe = perm_pow(T[s.gen], s.exp);
      for (u64 x = 0; x < n; ++x) R[x] = Pe[R[x]];
    }
    return R;
  };

  for (int i = 0; i < k; ++i) {
    std::vector<u32> lhs = perm_pow(T[i], pc_.rel_order(i));
    std::vector<u32> rhs = word_perm(pc_.power_word(i));
    if (lhs != rhs)
      return {false, "power relation fails for " + pc_.name(i)};
  }

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<u32> W = word_perm(pc_.conj_word(i, j));
      for (u64 x = 0; x < n; ++x) {
        if (T[i][T[j][x]] != W[T[i][x]])
          return {false, "conjugation relation fails for (" + pc_.name(i) + ", " +
                             pc_.name(j) + ")"};
      }
    }
  }

  // Collection of a two-generator product must agree with successive
  // single-generator multiplications from any starting element.
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const u32 z = mul(gen(i), gen(j));
      for (u64 x = 0; x < n; ++x) {
        if (T[j][T[i][x]] != mul(static_cast<u32>(x), z))
          return {false, "associativity fails through product " + pc_.name(i) +
                             "*" + pc_.name(j)};
      }
    }
  }

  return {true, ""};
}

u32 QuotientGroup::project(u32 parent_idx) const {
  return qidx_[coset_rep_[parent_idx]];
}

u32 QuotientGroup::mul(u32 a, u32 b) const {
  return project(parent_->mul(reps_[a], reps_[b]));
}

u32 QuotientGroup::inv(u32 a) const { return project(parent_->inv(reps_[a])); }

std::vector<u32> QuotientGroup::generators() const {
  std::vector<u32> out;
  for (u32 g : parent_->generators()) {
    u32 q = project(g);
    if (q != 0 && std::find(out.begin(), out.end(), q) == out.end())
      out.push_back(q);
  }
  return out;
}

bool Subgroup::contains(u32 x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup() { return Subgroup{{0}, {}}; }

Subgroup full_subgroup(const GroupView& G) {
  Subgroup s;
  s.elements.resize(G.order());
  std::iota(s.elements.begin(), s.elements.end(), 0u);
  s.generating_set = G.generators();
  return s;
}

Subgroup closure(const GroupView& G, std::vector<u32> gens) {
  const u64 n = G.order();
  std::vector<char> mask(n, 0);
  mask[0] = 1;
  std::vector<u32> elems{0};
  std::vector<u32> active;
  std::vector<u32> kept;

  for (u32 g : gens) {
    if (g >= n) throw Error("closure: element index out of range");
    if (mask[g]) continue;
    kept.push_back(g);
    active.push_back(g);
    const u32 gi = G.inv(g);
    if (std::find(active.begin(), active.end(), gi) == active.end())
      active.push_back(gi);

    // Extend the current subgroup S to <S, g> one right coset of S at a time;
    // right multiplication permutes cosets, so a BFS over coset
    // representatives by the active generators reaches all of them.
    const std::vector<u32> base = elems;
    std::vector<u32> reps{0};
    for (std::size_t qi = 0; qi < reps.size(); ++qi) {
      const u32 r = reps[qi];
      for (u32 a : active) {
        const u32 t = G.mul(r, a);
        if (mask[t]) continue;
        reps.push_back(t);
        for (u32 s : base) {
          const u32 y = G.mul(s, t);
          mask[y] = 1;
          elems.push_back(y);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{std::move(elems), std::move(kept)};
}

Subgroup normal_closure(const GroupView& G, std::vector<u32> gens) {
  std::vector<u32> work = std::move(gens);
  const std::vector<u32> ggens = G.generators();
  for (;;) {
    Subgroup H = closure(G, work);
    bool grew = false;
    for (u32 s : H.generating_set) {
      for (u32 g : ggens) {
        const u32 c = G.conjugate(s, g);
        if (!H.contains(c)) {
          work.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return H;
  }
}

bool is_normal(const GroupView& G, const Subgroup& H) {
  // Assumes H.generating_set generates H.elements, which holds for every
  // Subgroup produced by closure and friends.
  for (u32 s : H.generating_set)
    for (u32 g : G.generators())
      if (!H.contains(G.conjugate(s, g))) return false;
  return true;
}

QuotientGroup quotient(const GroupView& G, const Subgroup& H) {
  if (!is_normal(G, H)) throw NotNormal("quotient by a non-normal subgroup");
  const u64 n = G.order();
  constexpr u32 kUnset = 0xFFFFFFFFu;
  QuotientGroup Q;
  Q.parent_ = &G;
  Q.coset_rep_.assign(n, kUnset);
  Q.qidx_.assign(n, 0);
  for (u64 x = 0; x < n; ++x) {
    if (Q.coset_rep_[x] != kUnset) continue;
    // x is minimal in its coset: smaller members would have marked it.
    const u32 rep = static_cast<u32>(x);
    for (u32 h : H.elements) Q.coset_rep_[G.mul(rep, h)] = rep;
    Q.qidx_[rep] = static_cast<u32>(Q.reps_.size());
    Q.reps_.push_back(rep);
  }
  return Q;
}

}  // namespace pnil

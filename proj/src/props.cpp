#include "pnil/props.hpp"

#include <algorithm>
#include <string>

namespace pnil {

int order_exp_of(const GroupView& G) {
  int e = 0;
  u64 n = G.order();
  while (n > 1) {
    if (n % static_cast<u64>(G.prime()) != 0)
      throw Error("group order is not a prime power");
    n /= static_cast<u64>(G.prime());
    ++e;
  }
  return e;
}

bool is_abelian(const GroupView& G) {
  const auto gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

namespace {

Subgroup power_image_closure(const GroupView& G, const std::vector<u32>& from,
                             int k) {
  const i64 q = ipow(G.prime(), k);
  std::vector<char> seen(G.order(), 0);
  std::vector<u32> images;
  for (u32 x : from) {
    const u32 y = G.power(x, q);
    if (!seen[y]) {
      seen[y] = 1;
      images.push_back(y);
    }
  }
  return closure(G, std::move(images));
}

}  // namespace

Subgroup agemo(const GroupView& G, int k) {
  std::vector<u32> all(G.order());
  for (u64 x = 0; x < G.order(); ++x) all[x] = static_cast<u32>(x);
  return power_image_closure(G, all, k);
}

Subgroup subgroup_agemo(const GroupView& G, const Subgroup& H, int k) {
  return power_image_closure(G, H.elements, k);
}

Subgroup derived_subgroup(const GroupView& G) {
  const auto gens = G.generators();
  std::vector<u32> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(G.commutator(gens[i], gens[j]));
  return normal_closure(G, std::move(comms));
}

Subgroup center(const GroupView& G) {
  const auto gens = G.generators();
  Subgroup Z;
  for (u64 x = 0; x < G.order(); ++x) {
    const u32 xi = static_cast<u32>(x);
    bool central = true;
    for (u32 g : gens) {
      if (G.mul(xi, g) != G.mul(g, xi)) {
        central = false;
        break;
      }
    }
    if (central) {
      Z.elements.push_back(xi);
      if (xi != 0) Z.generating_set.push_back(xi);
    }
  }
  return Z;
}

Subgroup omega(const GroupView& G, int k) {
  const i64 bound = ipow(G.prime(), k);
  std::vector<u32> small;
  for (u64 x = 0; x < G.order(); ++x) {
    const u32 xi = static_cast<u32>(x);
    if (G.power(xi, bound) == 0) small.push_back(xi);
  }
  return closure(G, std::move(small));
}

int exponent_exp(const GroupView& G) {
  i64 ex = 1;
  for (u64 x = 0; x < G.order(); ++x)
    ex = std::max(ex, G.order_of(static_cast<u32>(x)));
  int e = 0;
  while (ex > 1) {
    ex /= G.prime();
    ++e;
  }
  return e;
}

bool is_powerful(const GroupView& G) {
  const Subgroup D = derived_subgroup(G);
  const Subgroup P = agemo(G, G.prime() == 2 ? 2 : 1);
  return std::includes(P.elements.begin(), P.elements.end(),
                       D.elements.begin(), D.elements.end());
}

bool is_strongly_powerful(const GroupView& G) {
  const Subgroup D = derived_subgroup(G);
  const Subgroup P = agemo(G, 2);
  return std::includes(P.elements.begin(), P.elements.end(),
                       D.elements.begin(), D.elements.end());
}

bool is_powerfully_central_chain(const GroupView& G,
                                 const std::vector<Subgroup>& chain) {
  const auto ggens = G.generators();
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Subgroup& lo = chain[i];
    const Subgroup& hi = chain[i + 1];
    if (!std::includes(hi.elements.begin(), hi.elements.end(),
                       lo.elements.begin(), lo.elements.end()))
      return false;
    // [hi, G] is generated as a normal subgroup by commutators of generators.
    std::vector<u32> comms;
    for (u32 h : hi.generating_set)
      for (u32 g : ggens) comms.push_back(G.commutator(h, g));
    const Subgroup C = normal_closure(G, std::move(comms));
    const Subgroup N = subgroup_agemo(G, lo, 1);
    if (!std::includes(N.elements.begin(), N.elements.end(),
                       C.elements.begin(), C.elements.end()))
      return false;
  }
  return true;
}

std::vector<Subgroup> upper_series(const GroupView& G) {
  const auto gens = G.generators();
  std::vector<u32> gen_inv(gens.size());
  for (std::size_t t = 0; t < gens.size(); ++t) gen_inv[t] = G.inv(gens[t]);

  std::vector<Subgroup> series{trivial_subgroup()};
  for (;;) {
    const Subgroup& prev = series.back();
    const Subgroup N = subgroup_agemo(G, prev, 1);
    if (!is_normal(G, N))
      throw Error("upper_series: power subgroup unexpectedly not normal");
    // Preimage of the center of G/N: [a, x] in N for every generator x is
    // enough because N is normal.
    Subgroup next;
    for (u64 x = 0; x < G.order(); ++x) {
      const u32 a = static_cast<u32>(x);
      const u32 ai = G.inv(a);
      bool in = true;
      for (std::size_t t = 0; t < gens.size(); ++t) {
        const u32 comm = G.mul(ai, G.mul(gen_inv[t], G.mul(a, gens[t])));
        if (!N.contains(comm)) {
          in = false;
          break;
        }
      }
      if (in) {
        next.elements.push_back(a);
        if (a != 0) next.generating_set.push_back(a);
      }
    }
    if (next.elements == prev.elements) return series;
    const bool full = next.order() == G.order();
    series.push_back(std::move(next));
    if (full) return series;
  }
}

bool is_pn(const GroupView& G) {
  if (!is_powerful(G)) return false;
  return upper_series(G).back().order() == G.order();
}

int pn_class(const GroupView& G) {
  const auto series = upper_series(G);
  if (series.back().order() != G.order())
    throw Error("pn_class: no powerfully central series reaches the group");
  return static_cast<int>(series.size()) - 1;
}

int pn_coclass(const GroupView& G) { return order_exp_of(G) - pn_class(G); }

std::vector<int> type_signature(const GroupView& G) {
  std::vector<int> d;  // d[j] = log_p |G^{p^j}|
  for (int j = 0;; ++j) {
    const Subgroup A = agemo(G, j);
    int e = 0;
    u64 n = A.order();
    while (n > 1) {
      n /= static_cast<u64>(G.prime());
      ++e;
    }
    d.push_back(e);
    if (e == 0) break;
  }
  d.push_back(0);
  std::vector<int> sig;
  for (int j = 1; j + 1 <= static_cast<int>(d.size()) - 1; ++j) {
    const int nj = d[j - 1] - 2 * d[j] + d[j + 1];
    if (nj < 0)
      throw TypeSignatureError("agemo orders admit no cyclic decomposition");
    for (int t = 0; t < nj; ++t) sig.push_back(j);
  }
  return sig;
}

std::vector<int> abelian_invariants(const GroupView& G) {
  const Subgroup D = derived_subgroup(G);
  if (D.order() == 1) return type_signature(G);
  const QuotientGroup Q = quotient(G, D);
  return type_signature(Q);
}

}  // namespace pnil

// Catalogs of the groups of order p^4, p^5, p^6: presentation templates for
// the abelian, A, B, and E families, a class-2 refinement into collectable
// presentations, and isomorphism-invariant fingerprints.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "pnil/group.hpp"
#include "pnil/rank2.hpp"

namespace pnil::catalog {

// A presentation in display shape: generators g_0, ..., g_{k-1} of order
// p^{d_i} with every power relation trivial, all structure carried by
// commutator relations [g_i, g_j] = word (i < j); unlisted pairs commute.
// Commutator words use original generator indices; their exponents must be
// divisible by p (central values), which holds for every family here.
struct MinimalPresentation {
  i64 p = 0;
  std::vector<PcGenerator> generators;
  std::map<std::pair<int, int>, Word> commutators;
};

// Splits each generator g of order p^d into layers g, g^p, ..., g^{p^{d-1}},
// all of relative order p, ordered layer 0 first (original order) and then
// ascending by (layer, original index).  Valid for groups of class at most 2
// whose commutator values are p-th powers; the result is a collectable pc
// presentation whose consistency is then checked, not assumed.
PcPresentation refine_class2(const MinimalPresentation& mp);

enum class Family { abelian, family_a, family_b, family_e, rank_two };

struct CatalogEntry {
  Family family = Family::abelian;
  std::string label;
  i64 p = 0;
  int order_exp = 0;
  // Declared type: multiset of cyclic exponents the group's power structure
  // follows (ascending).
  std::vector<int> type_invariants;
  MinimalPresentation minimal;  // families abelian/A/B/E
  rank2::Params params;         // family rank_two

  PcGroup build() const;
};

MinimalPresentation abelian_presentation(i64 p, std::vector<int> invariants);
// A(n,t,s): a_1..a_t of order p, b of order p^n,
// [a_{2i-1}, a_{2i}] = b^{p^{n-1}} for 1 <= i <= s.
MinimalPresentation family_a_presentation(i64 p, int n, int t, int s);
// B(n,t,s): family A relations plus [a_{2s+1}, b] = b^{p^{n-1}}.
MinimalPresentation family_b_presentation(i64 p, int n, int t, int s);
// The exceptional order-p^5 and p^6 entries E1..E12.
MinimalPresentation family_e_presentation(i64 p, int index);
// E9 shape with [a,b] = c^{p^2 lambda}; lambda = 1 gives E8.
MinimalPresentation e9_lambda_presentation(i64 p, i64 lambda);

i64 least_nonsquare(i64 p);

// All powerfully nilpotent groups of order p^x, for x = 4, 5, 6; entries are
// ordered abelian, A, B, E, rank-2, each family in parameter order.
std::vector<CatalogEntry> catalog_for_order(i64 p, int x);

// Isomorphism invariants; equal fingerprints are a necessary condition for
// isomorphism.  Orders are stored as exponents of p.
struct Fingerprint {
  int order_exp = 0;
  std::vector<int> abelianization;
  int exponent_exp = 0;
  int center_exp = 0;
  int center_pow_exp = 0;  // |Z(G)^p|
  int derived_exp = 0;
  std::vector<int> agemo_exps;        // log_p |G^{p^j}|, j = 0, 1, ...
  std::vector<int> omega_exps;        // log_p |Omega_j(G)|, j = 1, 2, ...
  std::vector<u64> order_histogram;   // elements of order exactly p^j
  int pn_class = -1;                  // -1 when not powerfully nilpotent
  int pn_coclass = -1;
  std::vector<int> type_sig;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupView& G);

}  // namespace pnil::catalog

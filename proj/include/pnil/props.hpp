// Structural invariants of finite p-groups: power subgroups, omega subgroups,
// center, derived subgroup, powerful and powerfully nilpotent predicates,
// the fastest ascending powerfully central series, and type signatures.
#pragma once

#include <vector>

#include "pnil/group.hpp"

namespace pnil {

// Raised when agemo orders are not consistent with any multiset of cyclic
// invariants (only possible outside the powerful world).
struct TypeSignatureError : Error {
  using Error::Error;
};

int order_exp_of(const GroupView& G);
bool is_abelian(const GroupView& G);

// G^{p^k}: subgroup generated by all p^k-th powers (full element scan).
Subgroup agemo(const GroupView& G, int k);
// Subgroup of G generated by p^k-th powers of the elements of H.
Subgroup subgroup_agemo(const GroupView& G, const Subgroup& H, int k);
Subgroup derived_subgroup(const GroupView& G);
Subgroup center(const GroupView& G);
// Subgroup generated by all elements of order dividing p^k.
Subgroup omega(const GroupView& G, int k);
// exponent(G) = p^exponent_exp(G)
int exponent_exp(const GroupView& G);

// [G,G] <= G^p for odd p, [G,G] <= G^4 for p = 2.
bool is_powerful(const GroupView& G);
// [G,G] <= G^{p^2} at every prime.
bool is_strongly_powerful(const GroupView& G);

// Checks H_0 <= H_1 <= ... and [H_{i+1}, G] <= H_i^p at every step.
bool is_powerfully_central_chain(const GroupView& G,
                                 const std::vector<Subgroup>& chain);

// Fastest ascending chain with [Z_i, G] <= Z_{i-1}^p, starting from the
// trivial subgroup; the last entry is the stable term (G itself exactly when
// some powerfully central series reaches G).
std::vector<Subgroup> upper_series(const GroupView& G);
// Powerful with a powerfully central series reaching G.
bool is_pn(const GroupView& G);
// Length of the shortest powerfully central series; throws unless is_pn.
int pn_class(const GroupView& G);
int pn_coclass(const GroupView& G);

// Multiset (ascending) of exponents e with a cyclic factor p^e, read off the
// second differences of log_p |G^{p^j}|; throws TypeSignatureError when the
// differences go negative.
std::vector<int> type_signature(const GroupView& G);
// type_signature of G/[G,G].
std::vector<int> abelian_invariants(const GroupView& G);

}  // namespace pnil

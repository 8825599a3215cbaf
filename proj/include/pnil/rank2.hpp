// Two-generator groups G(n,m,r) and G(n,m,l,r): parameter validation,
// construction, recovery of parameters from an abstract group, enumeration by
// order, and closed-form counting with a brute-force shadow.
#pragma once

#include <string>
#include <vector>

#include "pnil/group.hpp"

namespace pnil::rank2 {

struct NotRank2 : Error {
  using Error::Error;
};

enum class Variant { type_one, type_two };

// Type I:  <a, b | a^{p^n} = b^{p^m} = 1, a^b = a^{1+p^r}>
// Type II: <a, b | a^{p^n} = 1, b^{p^m} = a^{p^l}, a^b = a^{1+p^r}>
// (l is meaningful for type II only and kept 0 otherwise.)
struct Params {
  Variant variant = Variant::type_one;
  int n = 0;
  int m = 0;
  int r = 0;
  int l = 0;

  int order_exp() const { return n + m; }
  std::string label() const;
  friend bool operator==(const Params&, const Params&) = default;
  friend auto operator<=>(const Params&, const Params&) = default;
};

Params type_one(int n, int m, int r);
Params type_two(int n, int m, int l, int r);

// Exactly the parameter ranges of the classification (independent of p).
bool validate(const Params& P);

// Throws PresentationError/NotRank2 on invalid parameters.
PcGroup build_group(const Params& P, i64 p);

// Recovers (variant, n, m, r, l) from any group presented through GroupView,
// using the power ladder A_k = <g^{p^k} : g generator>.  Throws NotRank2 when
// the group is not a 2-generator nonabelian group of this shape.
Params structure_invariants(const GroupView& G);

// All valid parameter tuples with n + m = x, sorted.
std::vector<Params> enumerate_rank2(int x);

struct CountBreakdown {
  int x = 0;
  i64 abelian = 0;
  i64 type_one = 0;
  i64 type_two = 0;
  i64 total = 0;
  friend bool operator==(const CountBreakdown&, const CountBreakdown&) = default;
};

// Direct enumeration of the parameter ranges.
CountBreakdown count_brute(int x);
// Closed forms; throws Error if the four formulas disagree with each other.
CountBreakdown count_closed(int x);
// Six-term floor expression for the type II count (0 for x < 8).
i64 type2_closed_display(int x);

struct ErratumMismatch {
  int x = 0;
  i64 display_value = 0;
  i64 enumerated_value = 0;
};

// Compares the type II display against enumeration on [lo, hi].
struct ErratumReport {
  bool display_matches_enumeration = true;
  std::vector<ErratumMismatch> mismatches;
};

ErratumReport shadow_check_type2(int lo, int hi);

}  // namespace pnil::rank2

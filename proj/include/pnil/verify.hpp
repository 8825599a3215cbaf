// Verification suites: each runs one falsifiable check over a parameterized
// range and reports pass/fail with timing and a summary line.  The
// acceptance harness and the command line verify-all both build on these.
#pragma once

#include <string>
#include <vector>

#include "pnil/pc.hpp"

namespace pnil::verify {

struct SuiteResult {
  std::string name;
  bool ok = false;
  double seconds = 0.0;
  std::string detail;
};

// Closed-form count breakdowns equal brute enumeration for 4 <= x <= max_x,
// plus frozen spot values at x = 4, 5, 6, 8, 9, 10.
SuiteResult counting_suite(int max_x);

// The two parity branches of the type I closed form against enumeration.
SuiteResult type_one_parity_suite(int max_x);

// Type II totals against enumeration on [lo, hi]; also reports whether the
// six-term floor display reproduces them or needs an erratum.
SuiteResult type_two_display_suite(int lo, int hi);

// Catalog sizes: 7/13/33 entries at orders p^4..p^6 for odd p, 6/11/23 for
// p = 2.
SuiteResult catalog_count_suite(const std::vector<i64>& odd_primes);

// Every catalog entry at the given primes: consistent presentation,
// powerful, powerfully nilpotent; strongly powerful when p = 2 or the entry
// is two-generator.
SuiteResult membership_suite(const std::vector<i64>& primes);

// Catalog entries pairwise non-isomorphic (fingerprints, then exhaustive
// search on collisions); the two unit-parameter groups at order p^6 are
// separated by exhausted search at p = 3 and by the square-class sweep at
// each given odd prime.
SuiteResult distinctness_suite(const std::vector<i64>& sweep_primes,
                               u64 node_budget);

// structure_invariants(build_group(P)) == P for every valid P with
// n + m <= max_x, at p = 3.
SuiteResult roundtrip_suite(int max_x);

// Symbolic descendant rules against concrete quotients by Z(G)^p for all
// parameters with n + m <= max_order_exp at the given primes, including the
// class-step and coclass audits.
SuiteResult ancestry_suite(const std::vector<i64>& primes, int max_order_exp);

// Frozen subgroup structure at p = 3: Z(G) = <a^{p^{n-r}}, b^{p^{n-r}}>,
// |[G,G]| = p^{n-r}, and |G^{p^m}| = p^{n-l} for type II.
SuiteResult center_suite(int max_order_exp);

// Assorted structural properties: the fast ascending series is a powerfully
// central chain starting at the center, the order-p^3 extraspecial groups
// are not powerfully nilpotent, and abelian type signatures match their
// invariants.
SuiteResult property_suite();

// All suites at command-line scale.
std::vector<SuiteResult> run_all(const std::vector<i64>& primes, int max_order_exp,
                                 u64 node_budget);

}  // namespace pnil::verify

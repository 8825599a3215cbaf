// Isomorphism testing between explicitly presented p-groups: a backtracking
// search over generator images, the square-class analysis separating the two
// order-p^6 groups that differ only by a unit parameter, and a distinctness
// report over a whole catalog.
#pragma once

#include <string>
#include <vector>

#include "pnil/catalog.hpp"

namespace pnil::iso {

struct IsoResult {
  enum class Status { found, none, budget_exhausted };
  Status status = Status::none;
  u64 nodes = 0;
  std::vector<u32> images;  // image of each pc generator of G, when found
};

// Searches for an isomorphism G -> H by assigning images to the pc
// generators of G, pruning candidates by element order and centralizer size
// and checking each defining relation as soon as its support is assigned.
// Exhausting the search space proves the groups are not isomorphic.
IsoResult iso_search(const PcGroup& G, const GroupView& H, u64 node_budget);

struct LambdaReport {
  i64 p = 0;
  bool preconditions_ok = false;
  bool explicit_isos_ok = false;
  bool partition_ok = false;
  // achieved[lambda-1]: all lambda' such that the group with parameter lambda
  // carries a generating triple in the defining shape with parameter lambda'.
  std::vector<std::vector<i64>> achieved;
  std::string detail;
};

// For each unit lambda, sweeps every reduced generating triple of the group
// with commutator parameter lambda and records which parameters are
// realizable; the group with parameter lambda' is isomorphic to the one with
// parameter lambda exactly when lambda' is realized.  The report checks that
// the realized sets are precisely the square classes.
LambdaReport verify_lambda_square(i64 p);

struct DistinctPair {
  std::string left;
  std::string right;
};

struct DistinctReport {
  bool all_distinct = false;
  int collision_pairs = 0;  // pairs sharing a fingerprint
  std::vector<DistinctPair> resolved;    // separated by exhausted search
  std::vector<DistinctPair> unresolved;  // search hit the node budget
  std::vector<DistinctPair> isomorphic;  // genuine duplicates (expected none)
  u64 nodes = 0;
};

// Pairwise distinctness of the catalog entries: fingerprints first, then an
// exhaustive generator-image search for each colliding pair.
DistinctReport verify_distinct(const std::vector<catalog::CatalogEntry>& entries,
                               u64 node_budget);

}  // namespace pnil::iso

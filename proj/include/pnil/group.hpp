// Concrete finite p-groups behind a uniform index-based interface, plus
// subgroup closure, normal closure, and quotient construction.
#pragma once

#include <memory>
#include <vector>

#include "pnil/pc.hpp"

namespace pnil {

struct NotNormal : Error {
  using Error::Error;
};

// Elements are indices 0..order()-1 with 0 the identity.
class GroupView {
 public:
  virtual ~GroupView() = default;
  virtual u64 order() const = 0;
  virtual i64 prime() const = 0;
  virtual u32 mul(u32 a, u32 b) const = 0;
  virtual u32 inv(u32 a) const = 0;
  virtual std::vector<u32> generators() const = 0;

  u32 conjugate(u32 x, u32 y) const;  // y^{-1} x y
  u32 commutator(u32 x, u32 y) const;
  u32 power(u32 x, i64 n) const;
  i64 order_of(u32 x) const;
};

struct ConsistencyReport {
  bool ok = true;
  std::string detail;  // first failure, empty when ok
};

class PcGroup final : public GroupView {
 public:
  explicit PcGroup(PcPresentation pc);

  const PcPresentation& presentation() const { return pc_; }
  u64 order() const override { return pc_.order(); }
  i64 prime() const override { return pc_.prime(); }
  u32 mul(u32 a, u32 b) const override;
  u32 inv(u32 a) const override;
  std::vector<u32> generators() const override;

  u32 index_of(const Element& x) const;
  Element element_of(u32 idx) const;
  u32 gen(int i) const;  // index of pc generator i

  // Dense multiplication table; worthwhile for heavily reused small groups.
  void cache_mul_table() const;
  bool has_mul_table() const { return !table_.empty(); }

  // Verifies that right multiplication by the generators satisfies every
  // defining relation pointwise.  The maps then generate a transitive
  // permutation group on order() points, which pins the presented group's
  // order to exactly p^(sum of exponents) and certifies collection.
  ConsistencyReport consistency_check() const;

 private:
  PcPresentation pc_;
  std::vector<u64> stride_;
  mutable std::vector<u32> table_;
};

struct Subgroup;
class QuotientGroup;
QuotientGroup quotient(const GroupView& G, const Subgroup& H);

class QuotientGroup final : public GroupView {
 public:
  u64 order() const override { return reps_.size(); }
  i64 prime() const override { return parent_->prime(); }
  u32 mul(u32 a, u32 b) const override;
  u32 inv(u32 a) const override;
  std::vector<u32> generators() const override;

  const GroupView& parent() const { return *parent_; }
  // Quotient index of the coset of a parent element.
  u32 project(u32 parent_idx) const;
  // Minimal parent index in the coset numbered q.
  u32 rep(u32 q) const { return reps_.at(q); }

 private:
  friend QuotientGroup quotient(const GroupView& G, const Subgroup& H);
  const GroupView* parent_ = nullptr;
  std::vector<u32> coset_rep_;  // parent index -> minimal index of its coset
  std::vector<u32> reps_;       // sorted coset representatives
  std::vector<u32> qidx_;       // parent index of a rep -> quotient index
};

struct Subgroup {
  std::vector<u32> elements;  // sorted, always contains 0
  std::vector<u32> generating_set;

  u64 order() const { return elements.size(); }
  bool contains(u32 x) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements == b.elements;
  }
};

Subgroup trivial_subgroup();
Subgroup full_subgroup(const GroupView& G);
// Smallest subgroup containing the given elements (BFS over products with
// the generators and their inverses).
Subgroup closure(const GroupView& G, std::vector<u32> gens);
Subgroup normal_closure(const GroupView& G, std::vector<u32> gens);
bool is_normal(const GroupView& G, const Subgroup& H);

}  // namespace pnil

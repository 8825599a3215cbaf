// Power-commutator presentations of finite p-groups, and collection from the
// left to bring words into normal form.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnil {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Malformed presentation data (bad prime, tail condition violated, ...).
struct PresentationError : Error {
  using Error::Error;
};
// Collection exceeded its step budget; treat the presentation as suspect.
struct CollectionLimit : Error {
  using Error::Error;
};

struct Syllable {
  int gen = 0;
  i64 exp = 0;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};
using Word = std::vector<Syllable>;

struct PcGenerator {
  std::string name;
  int order_exp = 1;  // relative order p^order_exp
};

i64 floor_div(i64 a, i64 b);
i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);
i64 ipow(i64 base, int exp);
bool is_prime(i64 n);

// Generators g_0 < g_1 < ... < g_{k-1}, each with relative order p^{e_i}.
// Power relation: g_i^{p^{e_i}} = power_word(i), a normal word over strictly
// later generators.  Conjugation relation: g_j^{g_i} = conj_word(i,j) for
// i < j, a normal word over generators >= j.  Under these shape constraints
// every tail <g_i, ..., g_{k-1}> is invariant under conjugation, which is what
// collection from the left needs to terminate on consistent input.
class PcPresentation {
 public:
  PcPresentation(i64 prime, std::vector<PcGenerator> generators,
                 std::vector<Word> power_relations,
                 std::map<std::pair<int, int>, Word> conjugations);

  i64 prime() const { return p_; }
  int count() const { return static_cast<int>(gens_.size()); }
  const PcGenerator& generator(int i) const { return gens_.at(i); }
  const std::string& name(int i) const { return gens_.at(i).name; }
  int index_of(const std::string& name) const;  // -1 if absent
  i64 rel_order(int i) const { return m_.at(i); }
  u64 order() const { return order_; }
  int order_exp() const { return order_exp_; }
  const Word& power_word(int i) const { return power_.at(i); }
  // g_j^{g_i} for i < j; trivial relations are stored as the word g_j^1.
  const Word& conj_word(int i, int j) const;
  bool conj_trivial(int i, int j) const;

 private:
  i64 p_ = 0;
  std::vector<PcGenerator> gens_;
  std::vector<i64> m_;  // m_[i] = p^{e_i}
  std::vector<Word> power_;
  std::vector<std::vector<Word>> conj_;  // conj_[i][j] for i < j
  u64 order_ = 1;
  int order_exp_ = 0;

  void validate_word(const Word& w, int min_gen, const char* what) const;
};

// Exponent tuple (x_0, ..., x_{k-1}) with 0 <= x_i < p^{e_i}.
struct Element {
  std::vector<i64> e;
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

Element identity(const PcPresentation& pc);
Element generator_element(const PcPresentation& pc, int i);
Word to_word(const Element& x);
bool is_identity(const Element& x);

// Collection from the left.  Budget guards non-termination on malformed input.
inline constexpr i64 kCollectionBudget = 1'000'000;
Element normalize(const PcPresentation& pc, const Word& w);
Element multiply(const PcPresentation& pc, const Element& x, const Element& y);
Element inverse(const PcPresentation& pc, const Element& x);
Element power(const PcPresentation& pc, const Element& x, i64 n);
// commutator(x, y) = x^{-1} y^{-1} x y
Element commutator(const PcPresentation& pc, const Element& x, const Element& y);
// conjugate(x, y) = y^{-1} x y
Element conjugate(const PcPresentation& pc, const Element& x, const Element& y);
// Least power of p (as p^k, returned as the integer order) killing x.
i64 order_of(const PcPresentation& pc, const Element& x);

}  // namespace pnil

#include "pnil/pc.hpp"

#include <algorithm>

namespace pnil {

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  base %= m;
  if (base < 0) base += m;
  i64 acc = 1 % m;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

i64 ipow(i64 base, int exp) {
  i64 acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void PcPresentation::validate_word(const Word& w, int min_gen,
                                   const char* what) const {
  int prev = -1;
  for (const auto& s : w) {
    if (s.gen < 0 || s.gen >= count())
      throw PresentationError(std::string(what) + ": generator index out of range");
    if (s.gen < min_gen)
      throw PresentationError(std::string(what) +
                              ": word uses a generator earlier than allowed");
    if (s.gen <= prev)
      throw PresentationError(std::string(what) + ": word is not normal");
    if (s.exp < 0 || s.exp >= m_[s.gen])
      throw PresentationError(std::string(what) + ": exponent out of range");
    prev = s.gen;
  }
}

PcPresentation::PcPresentation(i64 prime, std::vector<PcGenerator> generators,
                               std::vector<Word> power_relations,
                               std::map<std::pair<int, int>, Word> conjugations)
    : p_(prime), gens_(std::move(generators)), power_(std::move(power_relations)) {
  if (!is_prime(p_)) throw PresentationError("prime expected");
  const int k = count();
  if (k == 0) throw PresentationError("at least one generator required");
  if (static_cast<int>(power_.size()) != k)
    throw PresentationError("one power relation per generator required");
  m_.resize(k);
  for (int i = 0; i < k; ++i) {
    if (gens_[i].order_exp < 1 || gens_[i].order_exp > 62)
      throw PresentationError("relative order exponent out of range");
    m_[i] = ipow(p_, gens_[i].order_exp);
    order_exp_ += gens_[i].order_exp;
  }
  if (order_exp_ > 40) throw PresentationError("group order too large");
  order_ = static_cast<u64>(ipow(p_, order_exp_));
  for (int i = 0; i < k; ++i) {
    // Exponents are zero-based: the power word may only touch later gens.
    validate_word(power_[i], i + 1, "power relation");
  }
  conj_.assign(k, std::vector<Word>(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) conj_[i][j] = Word{{j, 1}};
  for (auto& [key, w] : conjugations) {
    auto [i, j] = key;
    if (!(0 <= i && i < j && j < k))
      throw PresentationError("conjugation relation must pair i < j");
    validate_word(w, j, "conjugation relation");
    conj_[i][j] = std::move(w);
  }
}

int PcPresentation::index_of(const std::string& name) const {
  for (int i = 0; i < count(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

const Word& PcPresentation::conj_word(int i, int j) const {
  return conj_.at(i).at(j);
}

bool PcPresentation::conj_trivial(int i, int j) const {
  const Word& w = conj_[i][j];
  return w.size() == 1 && w[0].gen == j && w[0].exp == 1;
}

Element identity(const PcPresentation& pc) {
  return Element{std::vector<i64>(pc.count(), 0)};
}

Element generator_element(const PcPresentation& pc, int i) {
  Element x = identity(pc);
  x.e.at(i) = 1;
  return x;
}

Word to_word(const Element& x) {
  Word w;
  for (int i = 0; i < static_cast<int>(x.e.size()); ++i)
    if (x.e[i] != 0) w.push_back({i, x.e[i]});
  return w;
}

bool is_identity(const Element& x) {
  return std::all_of(x.e.begin(), x.e.end(), [](i64 v) { return v == 0; });
}

namespace {

// Inverse of a word: reverse the syllables and negate exponents.
Word word_inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& s : r) s.exp = -s.exp;
  return r;
}

}  // namespace

Element normalize(const PcPresentation& pc, const Word& input) {
  const int k = pc.count();
  Word w;
  w.reserve(input.size());
  for (const auto& s : input)
    if (s.exp != 0) w.push_back(s);

  i64 steps = 0;
  // Length can grow transiently during collection; this bound is generous for
  // consistent presentations and trips quickly on divergent ones.
  const std::size_t max_len = 64 + 16 * static_cast<std::size_t>(k) * 40;

  std::size_t pos = 0;
  auto touched = [&](std::size_t at) { pos = at > 0 ? at - 1 : 0; };

  while (pos < w.size()) {
    if (++steps > kCollectionBudget || w.size() > max_len)
      throw CollectionLimit("collection budget exceeded");

    Syllable& cur = w[pos];
    if (cur.exp == 0) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos));
      touched(pos);
      continue;
    }
    const i64 m = pc.rel_order(cur.gen);
    if (cur.exp < 0 || cur.exp >= m) {
      // g^e = (g^m)^q g^r with e = qm + r, 0 <= r < m; g^m is the power word.
      i64 q = floor_div(cur.exp, m);
      cur.exp -= q * m;
      const Word& pw = pc.power_word(cur.gen);
      if (!pw.empty()) {
        if (pw.size() == 1) {
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                   Syllable{pw[0].gen, pw[0].exp * q});
        } else {
          Word chunk;
          const Word& src = q > 0 ? pw : word_inverse(pw);
          i64 reps = q > 0 ? q : -q;
          for (i64 t = 0; t < reps; ++t)
            chunk.insert(chunk.end(), src.begin(), src.end());
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                   chunk.begin(), chunk.end());
        }
      }
      touched(pos);
      continue;
    }
    if (pos + 1 >= w.size()) break;
    Syllable& nxt = w[pos + 1];
    if (nxt.exp == 0) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      touched(pos + 1);
      continue;
    }
    if (cur.gen == nxt.gen) {
      cur.exp += nxt.exp;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
      touched(pos);
      continue;
    }
    if (cur.gen < nxt.gen) {
      ++pos;
      continue;
    }
    // Out of order: w = ... g_j^A g_i^B ...  with j > i.
    const int j = cur.gen;
    const int i = nxt.gen;
    const i64 A = cur.exp;
    i64 B = nxt.exp;
    const i64 mi = pc.rel_order(i);
    if (B < 0 || B >= mi) {
      i64 q = floor_div(B, mi);
      nxt.exp -= q * mi;
      const Word& pw = pc.power_word(i);
      if (!pw.empty()) {
        Word chunk;
        const Word& src = q > 0 ? pw : word_inverse(pw);
        i64 reps = q > 0 ? q : -q;
        for (i64 t = 0; t < reps; ++t)
          chunk.insert(chunk.end(), src.begin(), src.end());
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2,
                 chunk.begin(), chunk.end());
      }
      touched(pos + 1);
      continue;
    }
    if (pc.conj_trivial(i, j)) {
      std::swap(cur, nxt);
      touched(pos);
      continue;
    }
    const Word& cw = pc.conj_word(i, j);
    if (cw.size() == 1 && cw[0].gen == j && pc.power_word(j).empty()) {
      // Pure-power conjugation g_j^{g_i} = g_j^s with g_j^{m_j} = 1, so
      // g_j^A g_i^B = g_i^B g_j^{A s^B mod m_j}.
      const i64 mj = pc.rel_order(j);
      i64 s = cw[0].exp % mj;
      if (s < 0) s += mj;
      i64 t = mul_mod(A % mj, pow_mod(s, B, mj), mj);
      cur = Syllable{i, B};
      nxt = Syllable{j, t};
      touched(pos);
      continue;
    }
    // One step: g_j^A g_i = g_i (g_j^{g_i})^A, peeled off one g_i at a time.
    // Build replacement for the pair in place.
    Word repl;
    repl.push_back({i, 1});
    for (i64 t = 0; t < A; ++t) repl.insert(repl.end(), cw.begin(), cw.end());
    if (A < 0) {
      repl.resize(1);
      Word cwi = word_inverse(cw);
      for (i64 t = 0; t < -A; ++t)
        repl.insert(repl.end(), cwi.begin(), cwi.end());
    }
    if (B != 1) repl.push_back({i, B - 1});
    auto it = w.begin() + static_cast<std::ptrdiff_t>(pos);
    it = w.erase(it, it + 2);
    w.insert(it, repl.begin(), repl.end());
    touched(pos);
  }

  Element out = identity(pc);
  for (const auto& s : w) {
    // After collection the word is normal with in-range exponents.
    out.e[static_cast<std::size_t>(s.gen)] = s.exp;
  }
  return out;
}

Element multiply(const PcPresentation& pc, const Element& x, const Element& y) {
  Word w = to_word(x);
  Word wy = to_word(y);
  w.insert(w.end(), wy.begin(), wy.end());
  return normalize(pc, w);
}

Element inverse(const PcPresentation& pc, const Element& x) {
  return normalize(pc, word_inverse(to_word(x)));
}

Element power(const PcPresentation& pc, const Element& x, i64 n) {
  if (n < 0) return power(pc, inverse(pc, x), -n);
  Element acc = identity(pc);
  Element base = x;
  while (n > 0) {
    if (n & 1) acc = multiply(pc, acc, base);
    n >>= 1;
    if (n > 0) base = multiply(pc, base, base);
  }
  return acc;
}

Element commutator(const PcPresentation& pc, const Element& x, const Element& y) {
  Word w = word_inverse(to_word(x));
  Word t = word_inverse(to_word(y));
  w.insert(w.end(), t.begin(), t.end());
  t = to_word(x);
  w.insert(w.end(), t.begin(), t.end());
  t = to_word(y);
  w.insert(w.end(), t.begin(), t.end());
  return normalize(pc, w);
}

Element conjugate(const PcPresentation& pc, const Element& x, const Element& y) {
  Word w = word_inverse(to_word(y));
  Word t = to_word(x);
  w.insert(w.end(), t.begin(), t.end());
  t = to_word(y);
  w.insert(w.end(), t.begin(), t.end());
  return normalize(pc, w);
}

i64 order_of(const PcPresentation& pc, const Element& x) {
  // In a p-group every order is a power of p: take p-th powers until trivial.
  i64 ord = 1;
  Element cur = x;
  while (!is_identity(cur)) {
    cur = power(pc, cur, pc.prime());
    ord *= pc.prime();
    if (ord > static_cast<i64>(pc.order()))
      throw Error("order_of: element order exceeds group order");
  }
  return ord;
}

}  // namespace pnil

#include "oidforge/symalg.hpp"

#include <algorithm>
#include <sstream>

#include "oidforge/resolution.hpp"

namespace oidforge {

int word_degree(const Word& w) {
  int d = 0;
  for (const auto& g : w) d += g.degree();
  return d;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "\xe2\x8a\x99";  // U+2299
    s += gen_name(w[i].level, w[i].index);
  }
  return s;
}

GradedWord GradedWord::canonical(Word letters) {
  GradedWord out;
  int sign = 1;
  // Insertion sort keeps track of transpositions of odd letters.
  for (std::size_t i = 1; i < letters.size(); ++i) {
    std::size_t j = i;
    while (j > 0 && letters[j] < letters[j - 1]) {
      if (letters[j].odd() && letters[j - 1].odd()) sign = -sign;
      std::swap(letters[j], letters[j - 1]);
      --j;
    }
  }
  for (std::size_t i = 1; i < letters.size(); ++i)
    if (letters[i] == letters[i - 1] && letters[i].odd()) sign = 0;
  out.letters = std::move(letters);
  out.sign = sign;
  return out;
}

std::string GradedWord::str() const {
  std::string s = sign < 0 ? "-" : sign == 0 ? "0*" : "";
  return s + word_str(letters);
}

int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b] && (degrees[perm[a]] & 1) && (degrees[perm[b]] & 1)) sign = -sign;
  return sign;
}

namespace {

void enum_rec(const std::vector<int>& ranks, int k, int remaining_levels, Word& cur,
              std::vector<Word>& out) {
  const int L = static_cast<int>(ranks.size());
  if (static_cast<int>(cur.size()) == k) {
    if (remaining_levels == 0) out.push_back(cur);
    return;
  }
  int left = k - static_cast<int>(cur.size());
  Gen start = cur.empty() ? Gen{1, 0} : cur.back();
  for (int lvl = start.level; lvl <= L; ++lvl) {
    if (lvl * left > remaining_levels) break;
    if (lvl + (left - 1) * L < remaining_levels) continue;
    int first = lvl == start.level ? start.index : 0;
    for (int idx = first; idx < ranks[lvl - 1]; ++idx) {
      Gen g{lvl, idx};
      if (!cur.empty() && g == cur.back() && g.odd()) continue;
      cur.push_back(g);
      enum_rec(ranks, k, remaining_levels - lvl, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<Word> enumerate_words(const std::vector<int>& ranks, int k, int m) {
  std::vector<Word> out;
  if (k < 1 || m > -k) return out;
  Word cur;
  enum_rec(ranks, k, -m, cur, out);
  return out;
}

// ---------------------------------------------------------------- elements

void add_term(Element& acc, const Gen& g, const Poly& f) {
  if (f.is_zero()) return;
  auto it = acc.find(g);
  if (it == acc.end()) {
    acc.emplace(g, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) acc.erase(it);
}

void add_scaled(Element& acc, const Poly& f, const Element& v) {
  if (f.is_zero()) return;
  for (const auto& [g, c] : v) add_term(acc, g, f * c);
}

void add_scaled(Element& acc, const Q& c, const Element& v) {
  if (sgn(c) == 0) return;
  for (const auto& [g, p] : v) add_term(acc, g, c * p);
}

Element negate(const Element& v) {
  Element out;
  for (const auto& [g, c] : v) out.emplace(g, -c);
  return out;
}

bool is_zero(const Element& v) { return v.empty(); }

Element gen_element(const RingPtr& r, const Gen& g) {
  Element e;
  e.emplace(g, Poly::constant(r, 1));
  return e;
}

std::string element_str(const Element& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << gen_name(g.level, g.index);
  }
  return os.str();
}

bool same_element(const Element& a, const Element& b) {
  if (a.size() != b.size()) return false;
  for (auto i = a.begin(), j = b.begin(); i != a.end(); ++i, ++j)
    if (!(i->first == j->first) || !(i->second == j->second)) return false;
  return true;
}

void add_term(SymTensor& acc, const Word& w, const Poly& f) {
  if (f.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, f);
    return;
  }
  it->second += f;
  if (it->second.is_zero()) acc.erase(it);
}

bool is_zero(const SymTensor& t) { return t.empty(); }

namespace {

void product_rec(const std::vector<Element>& factors, std::size_t i, Word& letters, const Poly& coeff,
                 SymTensor& out) {
  if (i == factors.size()) {
    GradedWord w = GradedWord::canonical(letters);
    if (w.sign != 0) add_term(out, w.letters, Q(w.sign) * coeff);
    return;
  }
  for (const auto& [g, c] : factors[i]) {
    letters.push_back(g);
    product_rec(factors, i + 1, letters, coeff * c, out);
    letters.pop_back();
  }
}

}  // namespace

SymTensor sym_product(const std::vector<Element>& factors) {
  SymTensor out;
  RingPtr r;
  for (const auto& f : factors)
    for (const auto& [g, c] : f)
      if (c.ring()) r = c.ring();
  if (!r) return out;
  Word letters;
  product_rec(factors, 0, letters, Poly::constant(r, 1), out);
  return out;
}

Element TaylorMap::at(const Word& letters) const {
  GradedWord w = GradedWord::canonical(letters);
  if (w.sign == 0) return {};
  auto it = values.find(w.letters);
  if (it == values.end()) return {};
  return w.sign > 0 ? it->second : negate(it->second);
}

void TaylorMap::set(const Word& canonical_word, Element v) {
  if (v.empty())
    values.erase(canonical_word);
  else
    values[canonical_word] = std::move(v);
}

// ---------------------------------------------------------------- shuffles

namespace {

void shuffle_rec(const std::vector<int>& degrees, const std::vector<int>& sizes, std::size_t block,
                 std::vector<char>& used, std::vector<std::vector<int>>& blocks,
                 const std::function<void(const std::vector<std::vector<int>>&, int)>& f) {
  const int n = static_cast<int>(degrees.size());
  if (block == sizes.size()) {
    std::vector<int> perm;
    for (const auto& b : blocks) perm.insert(perm.end(), b.begin(), b.end());
    f(blocks, koszul_sign(perm, degrees));
    return;
  }
  // The last block takes whatever is left.
  if (block + 1 == sizes.size()) {
    std::vector<int> rest;
    for (int p = 0; p < n; ++p)
      if (!used[p]) rest.push_back(p);
    if (static_cast<int>(rest.size()) != sizes[block]) return;
    blocks.push_back(rest);
    shuffle_rec(degrees, sizes, block + 1, used, blocks, f);
    blocks.pop_back();
    return;
  }
  std::vector<int> cur;
  std::function<void(int)> choose = [&](int from) {
    if (static_cast<int>(cur.size()) == sizes[block]) {
      for (int p : cur) used[p] = 1;
      blocks.push_back(cur);
      shuffle_rec(degrees, sizes, block + 1, used, blocks, f);
      blocks.pop_back();
      for (int p : cur) used[p] = 0;
      return;
    }
    for (int p = from; p < n; ++p) {
      if (used[p]) continue;
      cur.push_back(p);
      choose(p + 1);
      cur.pop_back();
    }
  };
  choose(0);
}

Q factorial(int k) {
  Q f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::vector<int> letter_degrees(const Word& w) {
  std::vector<int> d;
  for (const auto& g : w) d.push_back(g.degree());
  return d;
}

Word pick(const Word& w, const std::vector<int>& pos) {
  Word out;
  for (int p : pos) out.push_back(w[p]);
  return out;
}

Element apply_taylor(const std::vector<TaylorMap>& t, const Word& letters, const RingPtr& ring,
                     bool identity_if_empty) {
  if (identity_if_empty && t.empty()) {
    if (letters.size() == 1) return gen_element(ring, letters[0]);
    return {};
  }
  std::size_t r = letters.size() - 1;
  if (r >= t.size()) return {};
  return t[r].at(letters);
}

}  // namespace

void for_each_block_shuffle(const std::vector<int>& degrees, const std::vector<int>& sizes,
                            const std::function<void(const std::vector<std::vector<int>>&, int)>& f) {
  int total = 0;
  for (int s : sizes) total += s;
  if (total != static_cast<int>(degrees.size())) return;
  std::vector<char> used(degrees.size(), 0);
  std::vector<std::vector<int>> blocks;
  if (sizes.empty()) {
    f(blocks, 1);
    return;
  }
  shuffle_rec(degrees, sizes, 0, used, blocks, f);
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || n < k) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int parts) {
    if (parts == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int s = 1; s <= left - (parts - 1); ++s) {
      cur.push_back(s);
      rec(left - s, parts - 1);
      cur.pop_back();
    }
  };
  rec(n, k);
  return out;
}

SymTensor extend_comorphism(const std::vector<TaylorMap>& taylor, const Word& word,
                            int target_length, const RingPtr& ring) {
  SymTensor out;
  const int n = static_cast<int>(word.size());
  const std::vector<int> deg = letter_degrees(word);
  const Q norm = 1 / factorial(target_length);
  for (const auto& sizes : compositions(n, target_length)) {
    for_each_block_shuffle(deg, sizes, [&](const std::vector<std::vector<int>>& blocks, int sign) {
      std::vector<Element> factors;
      for (const auto& b : blocks) {
        Element v = apply_taylor(taylor, pick(word, b), ring, true);
        if (v.empty()) return;
        factors.push_back(std::move(v));
      }
      for (const auto& [w, c] : sym_product(factors)) add_term(out, w, (norm * sign) * c);
    });
  }
  return out;
}

SymTensor extend_coderivation(const std::vector<TaylorMap>& taylor, const std::vector<TaylorMap>& base,
                              const Word& word, int target_length, const RingPtr& ring) {
  SymTensor out;
  const int n = static_cast<int>(word.size());
  const std::vector<int> deg = letter_degrees(word);
  const Q norm = 1 / factorial(target_length - 1);
  for (const auto& sizes : compositions(n, target_length)) {
    for_each_block_shuffle(deg, sizes, [&](const std::vector<std::vector<int>>& blocks, int sign) {
      std::vector<Element> factors;
      for (std::size_t s = 0; s < blocks.size(); ++s) {
        Word letters = pick(word, blocks[s]);
        Element v = s == 0 ? apply_taylor(taylor, letters, ring, false)
                           : apply_taylor(base, letters, ring, true);
        if (v.empty()) return;
        factors.push_back(std::move(v));
      }
      for (const auto& [w, c] : sym_product(factors)) add_term(out, w, (norm * sign) * c);
    });
  }
  return out;
}

TensorPair coproduct(const Word& word, const RingPtr& ring) {
  TensorPair out;
  const int n = static_cast<int>(word.size());
  const std::vector<int> deg = letter_degrees(word);
  for (int i = 1; i < n; ++i) {
    for_each_block_shuffle(deg, {i, n - i}, [&](const std::vector<std::vector<int>>& blocks, int sign) {
      GradedWord a = GradedWord::canonical(pick(word, blocks[0]));
      GradedWord b = GradedWord::canonical(pick(word, blocks[1]));
      int s = sign * a.sign * b.sign;
      if (s == 0) return;
      auto key = std::make_pair(a.letters, b.letters);
      auto it = out.find(key);
      Poly c = Poly::constant(ring, s);
      if (it == out.end()) {
        out.emplace(key, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
    });
  }
  return out;
}

}  // namespace oidforge

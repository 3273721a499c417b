#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oidforge/poly.hpp"

namespace oidforge {

// Generator `index` (0-based) of E_{-level}; its degree is -level.
struct Gen {
  int level = 1;
  int index = 0;
  int degree() const { return -level; }
  bool odd() const { return level % 2 != 0; }
  auto operator<=>(const Gen&) const = default;
};

using Word = std::vector<Gen>;  // canonical words are sorted by (level, index)

int word_degree(const Word& w);
std::string word_str(const Word& w);

struct GradedWord {
  Word letters;
  int sign = 1;  // 0 when an odd letter repeats

  // Sorts the letters; the stored sign satisfies input = sign * canonical.
  static GradedWord canonical(Word letters);
  int degree() const { return word_degree(letters); }
  std::size_t size() const { return letters.size(); }
  std::string str() const;
};

// Sign eps with x_{perm[0]} ... x_{perm[k-1]} = eps * x_0 ... x_{k-1} in the free graded
// commutative algebra, for letters of the given degrees.
int koszul_sign(const std::vector<int>& perm, const std::vector<int>& degrees);

// Canonical words with k letters of total degree m, where ranks[i-1] generators live in degree -i.
std::vector<Word> enumerate_words(const std::vector<int>& ranks, int k, int m);

// ---------------------------------------------------------------- E-valued data

using Element = std::map<Gen, Poly>;

void add_term(Element& acc, const Gen& g, const Poly& f);
void add_scaled(Element& acc, const Poly& f, const Element& v);
void add_scaled(Element& acc, const Q& c, const Element& v);
Element negate(const Element& v);
bool is_zero(const Element& v);
Element gen_element(const RingPtr& r, const Gen& g);
std::string element_str(const Element& v);
bool same_element(const Element& a, const Element& b);

// Element of the symmetric power with O coefficients, keyed by canonical word.
using SymTensor = std::map<Word, Poly>;
void add_term(SymTensor& acc, const Word& w, const Poly& f);
bool is_zero(const SymTensor& t);
// Product of elements in the symmetric algebra, expanded in canonical words.
SymTensor sym_product(const std::vector<Element>& factors);

// Values of a multilinear map on canonical generator words.
struct TaylorMap {
  int arity = 0;
  int shift = 0;  // degree of the map
  std::map<Word, Element> values;

  // Value on an arbitrary ordering of generators (sign from canonicalization).
  Element at(const Word& letters) const;
  void set(const Word& canonical_word, Element v);
  bool empty() const { return values.empty(); }
};

// ---------------------------------------------------------------- shuffles

// Calls f(blocks, sign) for every ordered split of the positions 0..n-1 into blocks of the
// given sizes, increasing inside each block; sign is the Koszul sign of the reordering.
void for_each_block_shuffle(const std::vector<int>& degrees, const std::vector<int>& sizes,
                            const std::function<void(const std::vector<std::vector<int>>&, int)>& f);
// Ordered compositions of n into k positive parts.
std::vector<std::vector<int>> compositions(int n, int k);

// Component of length `target_length` of the coalgebra morphism with Taylor coefficients
// taylor[r] of arity r+1 (missing entries are zero), applied to a canonical word.
SymTensor extend_comorphism(const std::vector<TaylorMap>& taylor, const Word& word,
                            int target_length, const RingPtr& ring);
// Component of the coderivation along the comorphism `base` (identity when empty).
SymTensor extend_coderivation(const std::vector<TaylorMap>& taylor, const std::vector<TaylorMap>& base,
                              const Word& word, int target_length, const RingPtr& ring);

// Reduced deconcatenation coproduct, both tensor factors nonempty.
using TensorPair = std::map<std::pair<Word, Word>, Poly>;
TensorPair coproduct(const Word& word, const RingPtr& ring);

}  // namespace oidforge

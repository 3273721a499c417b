#pragma once

#include <functional>
#include <string>
#include <vector>

#include "oidforge/algebroid.hpp"

namespace oidforge {

// A multilinear map known on canonical generator words. When `leibniz` is set the map is a
// binary bracket whose first-order part is the anchor of that resolution.
struct MapView {
  int arity = 1;
  int degree = 0;
  std::function<Element(const Word&)> on_word;
  const FreeResolution* leibniz = nullptr;
};

MapView taylor_view(const TaylorMap& t, const FreeResolution* leibniz = nullptr);
MapView differential_view(const LieInftyAlgebroid& alg, bool augmented = false);
// l_k, with Leibniz terms for k = 2.
MapView bracket_view(const LieInftyAlgebroid& alg, int k);

// Expands args multilinearly; adds anchor terms for a Leibniz view.
Element evaluate(const MapView& m, const std::vector<Element>& args);
Element eval_bracket(const LieInftyAlgebroid& alg, int k, const std::vector<Element>& args);

// (P o R)(w) = sum over unshuffles of eps * P(R(w_sigma(0..q)), rest).
Element compose(const MapView& p, const MapView& r, const Word& w);

// Canonical words of E (ranks) with `arity` letters whose image under a map of degree `shift`
// lands in a level between lo and hi.
std::vector<Word> window_words(const std::vector<int>& ranks, int arity, int shift, int lo, int hi);

// [P,R] = P o R - (-1)^{|P||R|} R o P on all words with output in E (levels 1..L).
TaylorMap rn_bracket(const MapView& p, const MapView& r, const std::vector<int>& ranks);

// l2 o l2 on arity-3 words (output levels 1..L). Throws AnchorNotMorphism first if the anchor
// fails to intertwine l2 with the commutator.
TaylorMap jacobiator(const LieInftyAlgebroid& alg);

struct CheckReport {
  bool ok = true;
  std::string identity;  // name of the first failing identity
  Word witness;
  std::string detail;
  std::size_t words_checked = 0;
  std::string str() const;
};

CheckReport check_algebroid(const LieInftyAlgebroid& alg, int max_arity = -1);

struct MorphismTaylor {
  const LieInftyAlgebroid* source = nullptr;
  const LieInftyAlgebroid* target = nullptr;
  std::vector<TaylorMap> phi;  // phi[r] has arity r + 1, degree 0
};

// Anchor compatibility, chain-map property, and the arity-n morphism equations for n <= cap + 1.
CheckReport check_morphism(const MorphismTaylor& m, int cap = -1);

}  // namespace oidforge

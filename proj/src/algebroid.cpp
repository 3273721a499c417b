#include "oidforge/algebroid.hpp"

#include "oidforge/errors.hpp"

namespace oidforge {

Element vf_element(const VectorField& X) {
  Element e;
  for (int a = 0; a < X.dim(); ++a) add_term(e, Gen{0, a}, X[a]);
  return e;
}

VectorField element_vf(const Element& v, const RingPtr& r) {
  VectorField X = VectorField::zero(r);
  for (const auto& [g, c] : v) {
    if (g.level != 0) throw Error("element is not a vector field");
    X[g.index] += c;
  }
  return X;
}

ModVec element_vec(const Element& v, int level, int rank, const RingPtr& r) {
  ModVec out = zero_vec(r, rank);
  for (const auto& [g, c] : v)
    if (g.level == level) out[g.index] += c;
  return out;
}

Element vec_element(const ModVec& c, int level) {
  Element e;
  for (std::size_t j = 0; j < c.size(); ++j) add_term(e, Gen{level, static_cast<int>(j)}, c[j]);
  return e;
}

Element LieInftyAlgebroid::differential(const Gen& g, bool augmented) const {
  if (g.level == 1) {
    if (!augmented) return {};
    return vf_element(res.anchor_of(g.index));
  }
  if (g.level < 2 || g.level > length()) return {};
  return vec_element(res.diffs[g.level - 2].column(g.index), g.level - 1);
}

Element LieInftyAlgebroid::differential(const Element& v, bool augmented) const {
  Element out;
  for (const auto& [g, c] : v) add_scaled(out, c, differential(g, augmented));
  return out;
}

VectorField LieInftyAlgebroid::anchor(const Element& v) const {
  VectorField X = VectorField::zero(ring());
  for (const auto& [g, c] : v)
    if (g.level == 1) X += c * res.anchor_of(g.index);
  return X;
}

Element LieInftyAlgebroid::bracket_on(int k, const Word& letters) const {
  if (k == 1) {
    if (letters.size() != 1) throw ArityError("l1 takes one argument");
    return differential(letters[0]);
  }
  auto it = brackets.find(k);
  if (it == brackets.end()) return {};
  return it->second.at(letters);
}

const TaylorMap& LieInftyAlgebroid::table(int k) const {
  static const TaylorMap empty;
  auto it = brackets.find(k);
  return it == brackets.end() ? empty : it->second;
}

TaylorMap& LieInftyAlgebroid::mutable_table(int k) {
  TaylorMap& t = brackets[k];
  t.arity = k;
  t.shift = 1;
  return t;
}

bool same_structure(const LieInftyAlgebroid& a, const LieInftyAlgebroid& b) {
  if (!same_ring(a.ring(), b.ring()) || a.ranks() != b.ranks()) return false;
  if (!(a.res.anchor == b.res.anchor)) return false;
  for (int i = 2; i <= a.length(); ++i)
    if (!(a.res.diffs[i - 2] == b.res.diffs[i - 2])) return false;
  auto nonempty = [](const LieInftyAlgebroid& x) {
    std::map<int, const TaylorMap*> m;
    for (const auto& [k, t] : x.brackets)
      if (!t.empty()) m[k] = &t;
    return m;
  };
  auto ta = nonempty(a), tb = nonempty(b);
  if (ta.size() != tb.size()) return false;
  for (auto i = ta.begin(), j = tb.begin(); i != ta.end(); ++i, ++j) {
    if (i->first != j->first || i->second->values.size() != j->second->values.size()) return false;
    for (auto p = i->second->values.begin(), q = j->second->values.begin();
         p != i->second->values.end(); ++p, ++q)
      if (p->first != q->first || !same_element(p->second, q->second)) return false;
  }
  return true;
}

}  // namespace oidforge

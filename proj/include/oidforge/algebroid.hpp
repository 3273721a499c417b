#pragma once

#include <map>
#include <vector>

#include "oidforge/resolution.hpp"
#include "oidforge/symalg.hpp"

namespace oidforge {

// Level-0 generators stand for the coordinate fields d/dx_a, so vector fields (values in the
// resolved module) live in the same Element type as sections of E.
Element vf_element(const VectorField& X);
VectorField element_vf(const Element& v, const RingPtr& r);
// Coefficients of the level-`level` part of v, as a vector of length `rank`.
ModVec element_vec(const Element& v, int level, int rank, const RingPtr& r);
Element vec_element(const ModVec& c, int level);

struct LieInftyAlgebroid {
  FreeResolution res;
  std::map<int, TaylorMap> brackets;  // arity >= 2, values on canonical generator words
  int max_arity = 0;                  // tables above this arity are empty
  bool partial = false;               // built below the degree-count bound

  const RingPtr& ring() const { return res.ring; }
  int length() const { return res.length(); }
  const std::vector<int>& ranks() const { return res.ranks; }
  int arity_bound() const { return res.length() + 1; }

  // l1 on a generator; zero on E_{-1}. With `augmented`, E_{-1} maps to the anchor.
  Element differential(const Gen& g, bool augmented = false) const;
  Element differential(const Element& v, bool augmented = false) const;
  VectorField anchor(const Element& v) const;
  // l_k on generators in any order (k = 1 is the differential).
  Element bracket_on(int k, const Word& letters) const;
  const TaylorMap& table(int k) const;
  TaylorMap& mutable_table(int k);
};

// Structural equality of resolutions and tables.
bool same_structure(const LieInftyAlgebroid& a, const LieInftyAlgebroid& b);

}  // namespace oidforge

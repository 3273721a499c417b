#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "oidforge/algebroid.hpp"
#include "oidforge/module.hpp"

namespace oidforge {

// An element of the Page bicomplex: a multilinear map from words of the source resolution to
// the target, with values in levels 0..L (level 0 is the resolved module, as vector fields).
using PageElement = TaylorMap;

// D(P) = d o P - (-1)^{|P|} P o d', where the outer d includes the anchor and d' does not.
PageElement page_D(const PageElement& p, const FreeResolution& source, const FreeResolution& target);
PageElement page_D(const PageElement& p, const FreeResolution& res);

// Output level of p on a word (levels below 0 and above L are outside the complex).
int output_level(const PageElement& p, const Word& w);
PageElement page_sub(const PageElement& a, const PageElement& b);
bool page_equal(const PageElement& a, const PageElement& b);

// Solves D(R) = P by a column-wise diagram chase. R is zero on every word where P and all
// lower columns vanish.
class PageSolver {
 public:
  PageSolver(const FreeResolution& source, const FreeResolution& target, std::uint64_t seed = 0);
  PageElement solve(const PageElement& p) const;

 private:
  const Lifter* lifter(int level) const;
  const FreeResolution& source_;
  const FreeResolution& target_;
  std::uint64_t seed_;
  mutable std::vector<std::unique_ptr<Lifter>> lifters_;
};

PageElement page_solve(const PageElement& p, const FreeResolution& res, std::uint64_t seed = 0);

}  // namespace oidforge

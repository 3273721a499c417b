#pragma once

#include <cstdint>
#include <vector>

#include "oidforge/brackets.hpp"
#include "oidforge/page.hpp"

namespace oidforge {

struct BuildOptions {
  int max_arity = -1;        // default L + 1; lower values give a partial structure
  std::uint64_t seed = 0;    // tie-break order of the lifts for l_{>=3}
  // Assert that l_{>=3} vanishes on words in E_{-1} alone (valid when l2 is a Lie bracket there).
  bool expect_vanishing_on_generators = false;
};

// l2 = naive bracket from antisymmetrized structure functions plus the corrector.
LieInftyAlgebroid build_binary(const FreeResolution& res);
LieInftyAlgebroid build_all(const FreeResolution& res, const BuildOptions& opts = {});

struct Lie2Algebroid {
  LieInftyAlgebroid alg;
  TaylorMap bracket;     // l2 on E_{-1} x E_{-1}
  TaylorMap connection;  // l2 on E_{-1} x E_{-2}
  TaylorMap bracket3;    // l3 on E_{-1}^3
  CheckReport axioms;
};
Lie2Algebroid build_lie2(const FreeResolution& res, std::uint64_t seed = 0);

// Universal algebroid of chi * A from the one of A.
LieInftyAlgebroid rescale(const LieInftyAlgebroid& alg, const Poly& chi);
// Quotient by an ideal preserved by every anchor.
LieInftyAlgebroid restrict_to(const LieInftyAlgebroid& alg, const std::vector<Poly>& ideal);

}  // namespace oidforge

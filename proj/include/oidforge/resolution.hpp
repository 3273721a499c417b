#pragma once

#include <string>
#include <vector>

#include "oidforge/module.hpp"

namespace oidforge {

// E_{-1} <- E_{-2} <- ... <- E_{-L} with anchor rho: E_{-1} -> Der(O).
struct FreeResolution {
  RingPtr ring;
  std::vector<int> ranks;            // r_1..r_L
  std::vector<FreeModuleMap> diffs;  // diffs[i-2] = d^{(i)}: E_{-i} -> E_{-i+1}
  FreeModuleMap anchor;              // nvars x r_1

  int length() const { return static_cast<int>(ranks.size()); }
  int rank(int level) const { return level >= 1 && level <= length() ? ranks[level - 1] : 0; }
  // d^{(i)} for 2 <= i <= L; the zero map E_{-(L+1)} = 0 -> E_{-L} for i = L+1.
  FreeModuleMap diff(int i) const;
  VectorField anchor_of(int j) const;
  // The family whose image is the resolved module.
  std::vector<VectorField> generators() const;
};

// Name of generator j (0-based) at level i: e[i,j+1] for level 1, f for level 2, and so on.
std::string gen_name(int level, int index);

struct ExactnessLevel {
  int level = 0;
  FreeModuleMap syzygies;  // generators of ker d^{(level)} (ker rho at level 1)
  FreeModuleMap lifting;   // diff(level + 1) * lifting == syzygies
};

struct ExactnessCertificate {
  std::vector<ExactnessLevel> levels;
  // Recomputes every product and compares with the recorded syzygies.
  bool verify(const FreeResolution& res) const;
};

FreeResolution free_resolution(const std::vector<VectorField>& gens, const RingPtr& ring);
// Resolution of the submodule of O^m generated by the columns of `presentation`.
// `cap` defaults to nvars + 1 levels.
FreeResolution free_resolution(const FreeModuleMap& presentation, int cap = -1);
ExactnessCertificate certify_exactness(const FreeResolution& res);
// Checks d o d = 0 and rho o d^{(2)} = 0; returns an empty string or a description of the failure.
std::string complex_defect(const FreeResolution& res);

std::vector<VectorField> tangent_generators(const std::vector<Poly>& ideal_gens);
std::vector<VectorField> vanishing_generators(const std::vector<Poly>& ideal_gens);

// Membership of X in the O-span of gens.
bool in_span(const VectorField& X, const std::vector<VectorField>& gens);

}  // namespace oidforge

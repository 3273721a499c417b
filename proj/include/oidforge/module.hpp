#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oidforge/poly.hpp"

namespace oidforge {

// Element of the free module O^n.
using ModVec = std::vector<Poly>;

ModVec zero_vec(const RingPtr& r, int n);
bool is_zero(const ModVec& v);
ModVec add(const ModVec& a, const ModVec& b);
ModVec sub(const ModVec& a, const ModVec& b);
ModVec scale(const Poly& f, const ModVec& v);
std::string str(const ModVec& v);

// Homomorphism O^cols -> O^rows stored as a rows x cols matrix.
class FreeModuleMap {
 public:
  FreeModuleMap() = default;
  FreeModuleMap(RingPtr r, int rows, int cols);
  static FreeModuleMap from_columns(const RingPtr& r, int rows, const std::vector<ModVec>& cols);
  static FreeModuleMap identity(const RingPtr& r, int n);

  const RingPtr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Poly& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  ModVec column(int j) const;
  std::vector<ModVec> columns() const;
  ModVec apply(const ModVec& v) const;
  bool is_zero() const;
  friend FreeModuleMap operator*(const FreeModuleMap& a, const FreeModuleMap& b);
  friend bool operator==(const FreeModuleMap& a, const FreeModuleMap& b);

  // Degree labels of source and target (levels of the resolution, 0 for the anchor target).
  int source_level = 0;
  int target_level = 0;

 private:
  RingPtr ring_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> a_;
};

// Solver for N c = v over the (possibly quotient) ring of N, backed by a module Groebner basis
// of the graph of N in position-over-term order. Among reducers the lowest index wins. A nonzero
// seed permutes that priority and adds a fixed seeded combination of kernel generators to every
// nonzero lift, which changes the chosen lift but never its validity.
class Lifter {
 public:
  explicit Lifter(const FreeModuleMap& n, std::uint64_t seed = 0);
  std::optional<ModVec> lift(const ModVec& v) const;
  // Generators of ker N, pruned of members of the span of earlier ones.
  const std::vector<ModVec>& kernel() const { return kernel_; }
  const FreeModuleMap& map() const { return n_; }

 private:
  FreeModuleMap n_;
  RingPtr base_;
  std::vector<ModVec> gb_;  // over base ring, length rows + cols
  std::vector<std::size_t> priority_;
  std::vector<ModVec> kernel_;
  ModVec shift_;  // seeded element of ker N, empty for seed 0
};

// Columns generate ker M; M * S = 0.
FreeModuleMap syzygies(const FreeModuleMap& m);
std::optional<ModVec> lift(const FreeModuleMap& n, const ModVec& v, std::uint64_t seed = 0);
// Membership of v in the submodule generated by gens (plus the quotient ideal).
bool in_submodule(const ModVec& v, const std::vector<ModVec>& gens, const RingPtr& r, int rank);

// Module Groebner basis over a polynomial ring, position-over-term with lower component first.
std::vector<ModVec> module_groebner(const RingPtr& base, int rank, std::vector<ModVec> gens);

}  // namespace oidforge

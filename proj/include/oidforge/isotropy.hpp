#pragma once

#include <map>
#include <vector>

#include "oidforge/algebroid.hpp"
#include "oidforge/linalg.hpp"

namespace oidforge {

using QElement = std::map<Gen, Q>;

// All structure maps evaluated at a rational point of the base.
struct Specialization {
  QVector point;
  std::vector<int> ranks;
  QMatrix anchor;              // nvars x r1
  std::vector<QMatrix> diffs;  // diffs[i-2] = d^{(i)} at the point
  std::map<int, std::map<Word, QElement>> brackets;
  std::vector<QVector> anchor_kernel;  // basis of ker(rho_m) in E_{-1}|_m
  bool kernel_closed = true;           // l2 maps ker(rho_m) x ker(rho_m) into ker(rho_m)
};

Specialization specialize(const LieInftyAlgebroid& alg, const QVector& point);

// l2 at the point on two constant vectors of E_{-1}|_m.
QVector bracket_at(const Specialization& s, const QVector& u, const QVector& v);

struct IsotropyAlgebra {
  QVector point;
  std::vector<QVector> basis;                   // representatives in E_{-1}|_m
  std::vector<std::vector<QVector>> structure;  // [b_i, b_j] = sum_k structure[i][j][k] b_k
  int dimension() const { return static_cast<int>(basis.size()); }
  bool antisymmetric() const;
  bool jacobi_holds() const;
};

// ker(rho_m) / im(d2_m) with the bracket induced by l2.
IsotropyAlgebra isotropy_lie_algebra(const LieInftyAlgebroid& alg, const QVector& point);
// Coordinates of a kernel element in the quotient basis.
QVector isotropy_coordinates(const IsotropyAlgebra& g, const Specialization& s, const QVector& v);

bool is_regular(const LieInftyAlgebroid& alg, const QVector& point);

struct Minimality {
  bool minimal = false;
  Specialization structure;  // the Lie infinity-algebra on ker(rho_m) + E_{-2}|_m + ... when minimal
};
Minimality minimality_at(const LieInftyAlgebroid& alg, const QVector& point);

}  // namespace oidforge

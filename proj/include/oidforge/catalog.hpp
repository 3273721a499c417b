#pragma once

#include <vector>

#include "oidforge/algebroid.hpp"

namespace oidforge {

// Index sets of size k in {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k);

// Vector fields annihilating phi, resolved by multivector fields: E_{-i} = (i+1)-vectors,
// d = contraction with dphi, anchor(d_a ^ d_b) = phi_b d_a - phi_a d_b.
LieInftyAlgebroid koszul_foliation(const Poly& phi);

// I * Der(O) for I = <phi_1..phi_r>: E_{-j} has generators mu_S (x) d_a for j-subsets S,
// indexed by rank(S) * nvars + a.
LieInftyAlgebroid vanishing_ideal(const std::vector<Poly>& phis);

struct Hyperelliptic {
  LieInftyAlgebroid alg;   // over Q[x,y]/<y^2 - 2h>
  Poly d;                  // gcd(h, h')
  VectorField X, Y;        // anchors of tau and mu (Y absent when d = 1)
};

// Vector fields on y^2 = 2h(x). h lives in a ring whose first two variables are x and y.
// Singular case: l2(tau, mu) = (h'/d - 2 (h/d)(d'/d)) tau, the polynomial representative of
// (h'/d) tau - y (d'/d) mu modulo the rational multiple y d'/d^2 of d(eta).
Hyperelliptic hyperelliptic(const Poly& h);

}  // namespace oidforge

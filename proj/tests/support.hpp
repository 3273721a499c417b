#pragma once

#include <random>
#include <vector>

#include "oidforge/algebroid.hpp"
#include "oidforge/brackets.hpp"
#include "oidforge/poly.hpp"

namespace oidforge::testing {

// Small random data for property tests; every suite fixes its own seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Q rational() {
    int num = uniform(-5, 5);
    int den = uniform(1, 3);
    Q q(num, den);
    q.canonicalize();
    return q;
  }

  Poly poly(const RingPtr& r, int max_terms = 4, int max_deg = 3) {
    std::vector<Term> terms;
    int n = uniform(0, max_terms);
    for (int t = 0; t < n; ++t) {
      Mono m;
      int budget = uniform(0, max_deg);
      for (int k = 0; k < budget; ++k) {
        int v = uniform(0, r->nvars() - 1);
        m = m * Mono::var(v);
      }
      Q c = rational();
      if (sgn(c) != 0) terms.push_back({m, c});
    }
    return Poly::from_terms(r, std::move(terms));
  }

  VectorField field(const RingPtr& r, int max_terms = 3, int max_deg = 2) {
    std::vector<Poly> c;
    for (int a = 0; a < r->nvars(); ++a) c.push_back(poly(r, max_terms, max_deg));
    return VectorField(c);
  }

  ModVec vec(const RingPtr& r, int n, int max_terms = 2, int max_deg = 2) {
    ModVec v;
    for (int i = 0; i < n; ++i) v.push_back(poly(r, max_terms, max_deg));
    return v;
  }

  Element element(const RingPtr& r, const std::vector<int>& ranks, int level, int max_terms = 2) {
    Element e;
    for (int i = 0; i < ranks[level - 1]; ++i) add_term(e, Gen{level, i}, poly(r, max_terms, 2));
    return e;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random O-multilinear map on words of the given ranks with outputs in levels lo..L.
inline TaylorMap random_map(Sampler& s, const RingPtr& r, const std::vector<int>& ranks, int arity, int shift,
                            int lo = 1) {
  TaylorMap t;
  t.arity = arity;
  t.shift = shift;
  const int L = static_cast<int>(ranks.size());
  for (const Word& w : window_words(ranks, arity, shift, lo, L)) {
    if (s.uniform(0, 2) == 0) continue;
    int level = -(word_degree(w) + shift);
    Element v;
    if (level == 0) {
      for (int a = 0; a < r->nvars(); ++a) add_term(v, Gen{0, a}, s.poly(r, 1, 1));
    } else {
      v = s.element(r, ranks, level, 1);
    }
    t.set(w, v);
  }
  return t;
}

}  // namespace oidforge::testing

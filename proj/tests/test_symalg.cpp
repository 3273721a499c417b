#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "oidforge/symalg.hpp"
#include "support.hpp"

using namespace oidforge;
using oidforge::testing::Sampler;

namespace {

const Gen e1{1, 0}, e2{1, 1}, e3{1, 2}, f1{2, 0}, f2{2, 1}, g1{3, 0};

// Number of canonical words with k letters and total level s: a knapsack over generators where
// odd letters are used at most once.
long count_words(const std::vector<int>& ranks, int k, int s) {
  // table[j][t]: words with j letters and level sum t
  std::vector<std::vector<long>> table(k + 1, std::vector<long>(s + 1, 0));
  table[0][0] = 1;
  for (std::size_t lv = 0; lv < ranks.size(); ++lv) {
    const int level = static_cast<int>(lv) + 1;
    for (int g = 0; g < ranks[lv]; ++g) {
      auto next = table;
      for (int j = 0; j <= k; ++j)
        for (int t = 0; t <= s; ++t) {
          if (!table[j][t]) continue;
          for (int m = 1; j + m <= k && t + m * level <= s; ++m) {
            next[j + m][t + m * level] += table[j][t];
            if (level % 2) break;
          }
        }
      table = std::move(next);
    }
  }
  return table[k][s];
}

TaylorMap random_taylor(Sampler& s, const RingPtr& r, const std::vector<int>& ranks, int arity, int shift) {
  TaylorMap t;
  t.arity = arity;
  t.shift = shift;
  const int L = static_cast<int>(ranks.size());
  for (int level = 1; level <= L; ++level) {
    int in_level = level - shift;
    for (const Word& w : enumerate_words(ranks, arity, -in_level)) {
      if (s.uniform(0, 2) == 0) continue;
      t.set(w, s.element(r, ranks, level, 1));
    }
  }
  return t;
}

using Tensor2 = std::map<std::pair<Word, Word>, Poly>;

void add(Tensor2& acc, const Word& a, const Word& b, const Poly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(a, b);
  auto it = acc.find(key);
  if (it == acc.end()) {
    acc.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

SymTensor full_comorphism(const std::vector<TaylorMap>& t, const Word& w, const RingPtr& r) {
  SymTensor out;
  for (int k = 1; k <= static_cast<int>(w.size()); ++k)
    for (const auto& [u, c] : extend_comorphism(t, w, k, r)) add_term(out, u, c);
  return out;
}

SymTensor full_coderivation(const std::vector<TaylorMap>& h, const std::vector<TaylorMap>& base, const Word& w,
                            const RingPtr& r) {
  SymTensor out;
  for (int k = 1; k <= static_cast<int>(w.size()); ++k)
    for (const auto& [u, c] : extend_coderivation(h, base, w, k, r)) add_term(out, u, c);
  return out;
}

Tensor2 coproduct_of(const SymTensor& t, const RingPtr& r) {
  Tensor2 out;
  for (const auto& [w, c] : t)
    for (const auto& [ab, s] : coproduct(w, r)) add(out, ab.first, ab.second, c * s);
  return out;
}

}  // namespace

TEST_CASE("Koszul signs") {
  CHECK(koszul_sign({0, 1, 2}, {1, 1, 1}) == 1);
  CHECK(koszul_sign({1, 0}, {1, 1}) == -1);
  CHECK(koszul_sign({1, 0}, {1, 2}) == 1);
  CHECK(koszul_sign({2, 0, 1}, {1, 1, 1}) == 1);
  CHECK(koszul_sign({2, 1, 0}, {1, 1, 1}) == -1);
}

TEST_CASE("canonical words") {
  GradedWord w = GradedWord::canonical({e2, e1});
  CHECK(w.letters == Word{e1, e2});
  CHECK(w.sign == -1);
  CHECK(GradedWord::canonical({f1, e1}).sign == 1);
  CHECK(GradedWord::canonical({e1, e1}).sign == 0);
  CHECK(GradedWord::canonical({f1, f1}).sign == 1);
  CHECK(word_str({e1, f1}) == "e[1,1]\xe2\x8a\x99" "f[2,1]");

  // idempotent, and independent of the route to the canonical form
  std::vector<Gen> letters = {e3, f1, e1, g1, e2};
  std::vector<int> perm(letters.size());
  std::iota(perm.begin(), perm.end(), 0);
  GradedWord ref = GradedWord::canonical(letters);
  CHECK(GradedWord::canonical(ref.letters).sign == 1);
  do {
    Word shuffled;
    std::vector<int> degs;
    for (int p : perm) shuffled.push_back(letters[p]);
    for (const auto& g : letters) degs.push_back(g.degree());
    GradedWord c = GradedWord::canonical(shuffled);
    CHECK(c.letters == ref.letters);
    // shuffled = koszul_sign * letters, letters = ref.sign * canonical
    CHECK(c.sign == koszul_sign(perm, degs) * ref.sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("word enumeration") {
  CHECK(enumerate_words({2}, 2, -2) == std::vector<Word>{{e1, e2}});
  CHECK(enumerate_words({0, 1}, 2, -4) == std::vector<Word>{{f1, f1}});
  CHECK(enumerate_words({3, 1}, 3, -3) == std::vector<Word>{{e1, e2, e3}});
  for (const auto& ranks : std::vector<std::vector<int>>{{3, 1}, {4, 2}, {2, 3, 1}, {6, 4, 1}, {1, 1, 1, 1}})
    for (int k = 1; k <= 4; ++k)
      for (int s = k; s <= 4 * static_cast<int>(ranks.size()); ++s) {
        auto words = enumerate_words(ranks, k, -s);
        CHECK(static_cast<long>(words.size()) == count_words(ranks, k, s));
        CHECK(std::is_sorted(words.begin(), words.end()));
        for (const auto& w : words) {
          CHECK(static_cast<int>(w.size()) == k);
          CHECK(word_degree(w) == -s);
          CHECK(GradedWord::canonical(w).sign == 1);
        }
      }
}

TEST_CASE("block shuffles") {
  // 5!/(2!3!) unshuffles, each with its Koszul sign
  int count = 0, plus = 0;
  for_each_block_shuffle({-1, -1, -1, -1, -1}, {2, 3}, [&](const auto& blocks, int sign) {
    ++count;
    CHECK(std::is_sorted(blocks[0].begin(), blocks[0].end()));
    CHECK(std::is_sorted(blocks[1].begin(), blocks[1].end()));
    if (sign > 0) ++plus;
  });
  CHECK(count == 10);
  // signs of the (2,3) unshuffles of odd letters: q-binomial at q = -1 gives 2
  CHECK(plus - (count - plus) == 2);
  CHECK(compositions(4, 2) == std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}});
}

TEST_CASE("co-morphism extension") {
  auto r = Ring::make({"x", "y"});
  Word w = {e1, e2};
  SUBCASE("identity") {
    std::vector<TaylorMap> id;
    for (const Word& u : {Word{e1}, Word{e1, e2}, Word{e1, e2, f1}, Word{f1, f1}}) {
      SymTensor t = full_comorphism(id, u, r);
      REQUIRE(t.size() == 1);
      CHECK(t.begin()->first == u);
      CHECK(t.begin()->second == Poly::constant(r, 1));
    }
  }
  SUBCASE("two letters") {
    TaylorMap t0{1, 0, {}}, t1{2, 0, {}};
    Element a, b, c;
    add_term(a, e2, Poly::parse(r, "x"));
    add_term(b, e1, Poly::parse(r, "y"));
    add_term(c, f1, Poly::parse(r, "x*y"));
    t0.set({e1}, a);
    t0.set({e2}, b);
    t1.set(w, c);
    std::vector<TaylorMap> phi = {t0, t1};
    SymTensor one = extend_comorphism(phi, w, 1, r);
    CHECK(one == SymTensor{{Word{f1}, Poly::parse(r, "x*y")}});
    // Phi0(e1) Phi0(e2) = x y e2 e1 = -x y e1 e2
    SymTensor two = extend_comorphism(phi, w, 2, r);
    CHECK(two == SymTensor{{w, Poly::parse(r, "-x*y")}});
  }
  SUBCASE("compatibility with the coproduct") {
    std::vector<int> ranks = {2, 2, 1};
    Sampler s(7);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<TaylorMap> phi = {random_taylor(s, r, ranks, 1, 0), random_taylor(s, r, ranks, 2, 0),
                                    random_taylor(s, r, ranks, 3, 0)};
      for (int k = 1; k <= 3; ++k)
        for (int lv = k; lv <= 3; ++lv)
          for (const Word& u : enumerate_words(ranks, k, -lv)) {
            Tensor2 lhs = coproduct_of(full_comorphism(phi, u, r), r);
            Tensor2 rhs;
            for (const auto& [ab, c] : coproduct(u, r))
              for (const auto& [a, ca] : full_comorphism(phi, ab.first, r))
                for (const auto& [b, cb] : full_comorphism(phi, ab.second, r)) add(rhs, a, b, c * ca * cb);
            CHECK(lhs == rhs);
          }
    }
  }
}

TEST_CASE("co-derivation extension") {
  auto r = Ring::make({"x", "y"});
  std::vector<int> ranks = {2, 2, 1};
  SUBCASE("linear map") {
    // H on level-2 letters lands in level 1, on e's nothing (no level 0 here)
    TaylorMap hf{1, 1, {}};
    Element he1, he2;
    add_term(he1, e1, Poly::parse(r, "x"));
    add_term(he2, e2, Poly::parse(r, "1"));
    hf.set({f1}, he1);
    hf.set({f2}, he2);
    // word f1 f2 -> H(f1) f2 + H(f2) f1 (even letters, no sign)
    SymTensor t = extend_coderivation({hf}, {}, {f1, f2}, 2, r);
    SymTensor want;
    add_term(want, {e1, f2}, Poly::parse(r, "x"));
    add_term(want, {e2, f1}, Poly::parse(r, "1"));
    CHECK(t == want);
    CHECK(extend_coderivation({TaylorMap{1, 1, {}}}, {}, {f1, f2}, 2, r).empty());
  }
  SUBCASE("arity two on three letters") {
    Sampler s(3);
    TaylorMap h2 = random_taylor(s, r, ranks, 2, 1);
    std::vector<TaylorMap> h = {TaylorMap{1, 1, {}}, h2};
    for (const Word& u : enumerate_words(ranks, 3, -4)) {
      // H(u_a u_b) u_c summed over the three (2,1) unshuffles
      SymTensor direct;
      std::vector<int> deg;
      for (const auto& g : u) deg.push_back(g.degree());
      for_each_block_shuffle(deg, {2, 1}, [&](const auto& blocks, int sign) {
        Element v = h2.at({u[blocks[0][0]], u[blocks[0][1]]});
        Element rest = gen_element(r, u[blocks[1][0]]);
        for (const auto& [w, c] : sym_product({v, rest})) add_term(direct, w, Q(sign) * c);
      });
      CHECK(extend_coderivation(h, {}, u, 2, r) == direct);
    }
  }
  SUBCASE("co-Leibniz along a co-morphism") {
    Sampler s(19);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<TaylorMap> phi = {random_taylor(s, r, ranks, 1, 0), random_taylor(s, r, ranks, 2, 0)};
      std::vector<TaylorMap> h = {random_taylor(s, r, ranks, 1, 1), random_taylor(s, r, ranks, 2, 1)};
      for (int k = 1; k <= 3; ++k)
        for (int lv = k; lv <= 3; ++lv)
          for (const Word& u : enumerate_words(ranks, k, -lv)) {
            Tensor2 lhs = coproduct_of(full_coderivation(h, phi, u, r), r);
            Tensor2 rhs;
            for (const auto& [ab, c] : coproduct(u, r)) {
              auto ha = full_coderivation(h, phi, ab.first, r);
              auto pa = full_comorphism(phi, ab.first, r);
              auto hb = full_coderivation(h, phi, ab.second, r);
              auto pb = full_comorphism(phi, ab.second, r);
              for (const auto& [a, ca] : ha)
                for (const auto& [b, cb] : pb) add(rhs, a, b, c * ca * cb);
              // H passes the first factor: sign (-1)^{|H| |a|} with |H| = 1
              int sa = word_degree(ab.first) % 2 ? -1 : 1;
              for (const auto& [a, ca] : pa)
                for (const auto& [b, cb] : hb) add(rhs, a, b, Q(sa) * c * ca * cb);
            }
            CHECK(lhs == rhs);
          }
    }
  }
}

TEST_CASE("graded commutativity of the symmetric product") {
  auto r = Ring::make({"x"});
  Element a = gen_element(r, e1), b = gen_element(r, e2), c = gen_element(r, f1);
  auto ab = sym_product({a, b});
  auto ba = sym_product({b, a});
  REQUIRE(ab.size() == 1);
  CHECK(ab.begin()->second == -ba.begin()->second);
  CHECK(sym_product({a, c}) == sym_product({c, a}));
  CHECK(sym_product({a, a}).empty());
}

#include "oidforge/catalog.hpp"

#include <algorithm>
#include <map>

#include "oidforge/errors.hpp"

namespace oidforge {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Sorts idx in place; returns the sign of the sorting permutation, 0 on a repeat.
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

class SubsetIndex {
 public:
  SubsetIndex(int n, int max_k) : sets_(static_cast<std::size_t>(max_k) + 1) {
    for (int k = 0; k <= max_k; ++k) {
      sets_[k] = subsets(n, k);
      for (int i = 0; i < static_cast<int>(sets_[k].size()); ++i) rank_[sets_[k][i]] = i;
    }
  }
  const std::vector<int>& set(int k, int i) const { return sets_[k][i]; }
  int count(int k) const { return static_cast<int>(sets_[k].size()); }
  int rank(const std::vector<int>& s) const { return rank_.at(s); }

 private:
  std::vector<std::vector<std::vector<int>>> sets_;
  std::map<std::vector<int>, int> rank_;
};

// Mixed partial derivatives, cached by the sorted variable list.
class Partials {
 public:
  explicit Partials(Poly f) : f_(std::move(f)) {}
  const Poly& at(std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    auto it = cache_.find(vars);
    if (it != cache_.end()) return it->second;
    Poly g = f_;
    for (int v : vars) {
      if (g.is_zero()) break;
      g = g.derivative(v);
    }
    return cache_.emplace(vars, std::move(g)).first->second;
  }

 private:
  Poly f_;
  std::map<std::vector<int>, Poly> cache_;
};

FreeModuleMap matrix(const RingPtr& r, int rows, const std::vector<ModVec>& cols, int src, int tgt) {
  FreeModuleMap m = cols.empty() ? FreeModuleMap(r, rows, 0) : FreeModuleMap::from_columns(r, rows, cols);
  m.source_level = src;
  m.target_level = tgt;
  return m;
}

}  // namespace

LieInftyAlgebroid koszul_foliation(const Poly& phi) {
  const RingPtr& ring = phi.ring();
  const int d = ring->nvars();
  if (d < 2) throw Error("Koszul foliation needs at least two variables");
  const int L = d - 1;
  SubsetIndex sets(d, d);
  std::vector<Poly> grad;
  for (int a = 0; a < d; ++a) grad.push_back(phi.derivative(a));

  LieInftyAlgebroid alg;
  alg.res.ring = ring;
  for (int i = 1; i <= L; ++i) alg.res.ranks.push_back(sets.count(i + 1));

  std::vector<ModVec> anchor;
  for (int j = 0; j < sets.count(2); ++j) {
    const auto& s = sets.set(2, j);
    ModVec c = zero_vec(ring, d);
    c[s[0]] = grad[s[1]];
    c[s[1]] = -grad[s[0]];
    anchor.push_back(std::move(c));
  }
  alg.res.anchor = matrix(ring, d, anchor, 1, 0);

  // d(d_I) = sum_t (-1)^t phi_{I_t} d_{I \ I_t}
  for (int i = 2; i <= L; ++i) {
    std::vector<ModVec> cols;
    for (int j = 0; j < sets.count(i + 1); ++j) {
      const auto& s = sets.set(i + 1, j);
      ModVec c = zero_vec(ring, sets.count(i));
      for (int t = 0; t <= i; ++t) {
        std::vector<int> rest = s;
        rest.erase(rest.begin() + t);
        Poly term = grad[s[t]];
        c[sets.rank(rest)] += (t % 2 ? -term : term);
      }
      cols.push_back(std::move(c));
    }
    alg.res.diffs.push_back(matrix(ring, sets.count(i), cols, i, i - 1));
  }

  // {d_I1, ..., d_In} = sum over picks i_s in I_s of eps * phi_{i_1..i_n} d_{remainders}, where
  // eps is the signature moving the picks (in slot order) to the front of I_1 . ... . I_n, times
  // the regrading sign between the wedge algebra and the shifted generators.
  Partials partials(phi);
  const int K = L + 1;
  for (int n = 2; n <= K; ++n) {
    TaylorMap& table = alg.mutable_table(n);
    for (int out = 1; out <= L; ++out) {
      for (const Word& w : enumerate_words(alg.res.ranks, n, -(out + 1))) {
        Element value;
        std::vector<const std::vector<int>*> args;
        for (const auto& g : w) args.push_back(&sets.set(g.level + 1, g.index));
        std::vector<int> pick(n, 0);
        while (true) {
          std::vector<int> vars, rest;
          int passed = 0;  // non-picked indices preceding the current slot
          int sign = 1;
          for (int s = 0; s < n; ++s) {
            const auto& I = *args[s];
            vars.push_back(I[pick[s]]);
            // picks to the front, then the regrading sign (-1)^{(n-1-s) * level_s}
            if ((passed + pick[s] + (n - 1 - s) * (static_cast<int>(I.size()) - 1)) % 2) sign = -sign;
            for (int p = 0; p < static_cast<int>(I.size()); ++p)
              if (p != pick[s]) rest.push_back(I[p]);
            passed += static_cast<int>(I.size()) - 1;
          }
          int ss = sort_sign(rest);
          if (ss != 0) {
            const Poly& c = partials.at(vars);
            if (!c.is_zero()) add_term(value, Gen{out, sets.rank(rest)}, sign * ss == 1 ? c : -c);
          }
          int s = n - 1;
          while (s >= 0 && pick[s] + 1 == static_cast<int>(args[s]->size())) pick[s--] = 0;
          if (s < 0) break;
          ++pick[s];
        }
        table.set(w, std::move(value));
      }
    }
  }
  alg.max_arity = K;
  return alg;
}

LieInftyAlgebroid vanishing_ideal(const std::vector<Poly>& phis) {
  if (phis.empty()) throw Error("vanishing ideal needs at least one generator");
  const RingPtr& ring = phis[0].ring();
  const int d = ring->nvars();
  const int r = static_cast<int>(phis.size());
  SubsetIndex sets(r, r);

  LieInftyAlgebroid alg;
  alg.res.ring = ring;
  for (int j = 1; j <= r; ++j) alg.res.ranks.push_back(sets.count(j) * d);
  auto gen_of = [&](const std::vector<int>& s, int a) { return sets.rank(s) * d + a; };

  std::vector<ModVec> anchor;
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < d; ++a) {
      ModVec c = zero_vec(ring, d);
      c[a] = phis[i];
      anchor.push_back(std::move(c));
    }
  alg.res.anchor = matrix(ring, d, anchor, 1, 0);

  for (int j = 2; j <= r; ++j) {
    std::vector<ModVec> cols;
    for (int k = 0; k < sets.count(j); ++k) {
      const auto& s = sets.set(j, k);
      for (int a = 0; a < d; ++a) {
        ModVec c = zero_vec(ring, alg.res.ranks[j - 2]);
        for (int t = 0; t < j; ++t) {
          std::vector<int> rest = s;
          rest.erase(rest.begin() + t);
          c[gen_of(rest, a)] += (t % 2 ? -phis[s[t]] : phis[s[t]]);
        }
        cols.push_back(std::move(c));
      }
    }
    alg.res.diffs.push_back(matrix(ring, alg.res.ranks[j - 2], cols, j, j - 1));
  }

  // One argument j gives up mu_i, every other argument s gives up d_{a_s}; the value is
  // d^{n-1} phi_i / prod_{s != j} dx_{a_s} on the remaining mu's tensor d_{a_j}.
  std::vector<Partials> partials;
  for (const auto& p : phis) partials.emplace_back(p);
  const int L = r;
  const int K = L + 1;
  for (int n = 2; n <= K; ++n) {
    TaylorMap& table = alg.mutable_table(n);
    for (int out = 1; out <= L; ++out) {
      for (const Word& w : enumerate_words(alg.res.ranks, n, -(out + 1))) {
        Element value;
        std::vector<const std::vector<int>*> mus;
        std::vector<int> dirs;
        for (const auto& g : w) {
          mus.push_back(&sets.set(g.level, g.index / d));
          dirs.push_back(g.index % d);
        }
        int before = 0;  // mu letters in slots before j
        for (int j = 0; j < n; ++j) {
          std::vector<int> vars;
          for (int s = 0; s < n; ++s)
            if (s != j) vars.push_back(dirs[s]);
          const auto& S = *mus[j];
          for (int p = 0; p < static_cast<int>(S.size()); ++p) {
            const Poly& c = partials[S[p]].at(vars);
            if (c.is_zero()) continue;
            std::vector<int> rest;
            for (int s = 0; s < n; ++s)
              for (int q = 0; q < static_cast<int>(mus[s]->size()); ++q)
                if (s != j || q != p) rest.push_back((*mus[s])[q]);
            int ss = sort_sign(rest);
            if (ss == 0) continue;
            int sign = ss * ((before + p) % 2 ? -1 : 1) * (n % 2 ? 1 : -1);
            add_term(value, Gen{out, gen_of(rest, dirs[j])}, sign > 0 ? c : -c);
          }
          before += static_cast<int>(S.size());
        }
        table.set(w, std::move(value));
      }
    }
  }
  alg.max_arity = K;
  return alg;
}

Hyperelliptic hyperelliptic(const Poly& h) {
  const RingPtr& base = h.ring();
  if (base->nvars() < 2) throw Error("hyperelliptic curve needs variables x and y");
  Poly y = Poly::variable(base, 1);
  RingPtr ring = Ring::quotient(base, {y * y - Q(2) * h});
  auto q = [&](const Poly& p) { return p.in_ring(ring); };
  Poly hp = h.derivative(0);
  Poly d = univariate_gcd(h, hp, 0);
  Hyperelliptic out;
  out.d = q(d);
  LieInftyAlgebroid& alg = out.alg;
  alg.res.ring = ring;
  Poly yq = Poly::variable(ring, 1);
  out.X = VectorField({yq, q(hp)});
  if (d.is_constant()) {
    alg.res.ranks = {1};
    alg.res.anchor = matrix(ring, 2, {out.X.coeff()}, 1, 0);
    alg.max_arity = 2;
    return out;
  }
  Poly h_d = divide_exact(h, d);
  Poly hp_d = divide_exact(hp, d);
  out.Y = VectorField({Q(2) * q(h_d), yq * q(hp_d)});
  alg.res.ranks = {2, 1};
  alg.res.anchor = matrix(ring, 2, {out.X.coeff(), out.Y.coeff()}, 1, 0);
  // d(eta) = y tau - d(x) mu
  alg.res.diffs.push_back(matrix(ring, 2, {{yq, -q(d)}}, 2, 1));
  Poly coeff = hp_d - Q(2) * divide_exact(h_d * d.derivative(0), d);
  TaylorMap& l2 = alg.mutable_table(2);
  Element v;
  add_term(v, Gen{1, 0}, q(coeff));
  l2.set({Gen{1, 0}, Gen{1, 1}}, std::move(v));
  alg.max_arity = 3;
  return out;
}

}  // namespace oidforge

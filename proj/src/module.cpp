#include "oidforge/module.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "oidforge/errors.hpp"

namespace oidforge {

// ---------------------------------------------------------------- vectors

ModVec zero_vec(const RingPtr& r, int n) { return ModVec(static_cast<std::size_t>(n), Poly(r)); }

bool is_zero(const ModVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

ModVec add(const ModVec& a, const ModVec& b) {
  ModVec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

ModVec sub(const ModVec& a, const ModVec& b) {
  ModVec out = a;
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

ModVec scale(const Poly& f, const ModVec& v) {
  ModVec out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(f * p);
  return out;
}

std::string str(const ModVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- matrices

FreeModuleMap::FreeModuleMap(RingPtr r, int rows, int cols)
    : ring_(std::move(r)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, Poly(ring_)) {}

FreeModuleMap FreeModuleMap::from_columns(const RingPtr& r, int rows, const std::vector<ModVec>& cols) {
  FreeModuleMap m(r, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw Error("column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i].in_ring(r);
  }
  return m;
}

FreeModuleMap FreeModuleMap::identity(const RingPtr& r, int n) {
  FreeModuleMap m(r, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly::constant(r, 1);
  return m;
}

ModVec FreeModuleMap::column(int j) const {
  ModVec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

std::vector<ModVec> FreeModuleMap::columns() const {
  std::vector<ModVec> out;
  for (int j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

ModVec FreeModuleMap::apply(const ModVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("vector length mismatch");
  ModVec out = zero_vec(ring_, rows_);
  for (int j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
  }
  return out;
}

bool FreeModuleMap::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

FreeModuleMap operator*(const FreeModuleMap& a, const FreeModuleMap& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
  FreeModuleMap m(a.ring_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  m.source_level = b.source_level;
  m.target_level = a.target_level;
  return m;
}

bool operator==(const FreeModuleMap& a, const FreeModuleMap& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

// ---------------------------------------------------------------- module Groebner engine

namespace {

int lead_comp(const ModVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

// v -= c*m*g componentwise from component `from` on.
void sub_mul(ModVec& v, const Q& c, const Mono& m, const ModVec& g, int from) {
  for (std::size_t k = static_cast<std::size_t>(from); k < v.size(); ++k)
    if (!g[k].is_zero()) v[k].sub_mul_term(c, m, g[k]);
}

void make_monic(ModVec& v) {
  int c = lead_comp(v);
  if (c < 0) return;
  Q s = 1 / v[c].lead().c;
  if (s == 1) return;
  for (auto& p : v) p = s * p;
}

// Reduces the leading term while it lies in a component below `limit` and a reducer exists.
// Reducers are tried in the order given by `prio`.
void top_reduce(ModVec& v, const std::vector<ModVec>& G, const std::vector<int>& comps,
                const std::vector<std::size_t>& prio, int limit) {
  for (;;) {
    int c = lead_comp(v);
    if (c < 0 || c >= limit) return;
    const Term& lt = v[c].lead();
    const ModVec* g = nullptr;
    for (std::size_t k : prio)
      if (comps[k] == c && G[k][c].lead().m.divides(lt.m)) {
        g = &G[k];
        break;
      }
    if (!g) return;
    Q q = lt.c / (*g)[c].lead().c;
    Mono m = lt.m / (*g)[c].lead().m;
    sub_mul(v, q, m, *g, c);
  }
}

// Reduces every term of every component.
void full_reduce(ModVec& v, const std::vector<ModVec>& G, const std::vector<int>& comps) {
  if (v.empty()) return;
  const RingPtr B = v[0].ring();
  for (std::size_t c = 0; c < v.size(); ++c) {
    std::vector<Term> done;
    while (!v[c].is_zero()) {
      Term lt = v[c].lead();
      const ModVec* g = nullptr;
      for (std::size_t k = 0; k < G.size(); ++k)
        if (comps[k] == static_cast<int>(c) && G[k][c].lead().m.divides(lt.m)) {
          g = &G[k];
          break;
        }
      if (!g) {
        v[c] -= Poly::monomial(v[c].ring(), lt.m, lt.c);
        done.push_back(std::move(lt));
        continue;
      }
      Q q = lt.c / (*g)[c].lead().c;
      Mono m = lt.m / (*g)[c].lead().m;
      sub_mul(v, q, m, *g, static_cast<int>(c));
    }
    v[c] = Poly::from_terms(v[c].ring() ? v[c].ring() : B, std::move(done));
  }
}

std::vector<std::size_t> identity_prio(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<ModVec> groebner_impl(const RingPtr& B, std::vector<ModVec> gens) {
  const Ring& ring = *B;
  std::vector<ModVec> G;
  std::vector<int> comps;
  for (auto& g : gens) {
    for (auto& p : g) p = p.lift().in_ring(B);
    top_reduce(g, G, comps, identity_prio(G.size()), static_cast<int>(g.size()));
    int c = lead_comp(g);
    if (c < 0) continue;
    make_monic(g);
    G.push_back(std::move(g));
    comps.push_back(c);
  }

  struct Pair {
    std::size_t i, j;
    Mono l;
    int comp;
  };
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (comps[i] != comps[j]) continue;
      pairs.push_back({i, j, lcm(G[i][comps[i]].lead().m, G[j][comps[j]].lead().m), comps[i]});
      pending.insert({i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return pending.count({a, b}) > 0;
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.l.deg != b.l.deg) {
        if (a.l.deg < b.l.deg) best = k;
        continue;
      }
      if (a.comp != b.comp) {
        if (a.comp > b.comp) best = k;
        continue;
      }
      if (ring.cmp(a.l, b.l) < 0) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    pending.erase({p.i, p.j});
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j || comps[k] != p.comp) continue;
      if (G[k][p.comp].lead().m.divides(p.l) && !is_pending(p.i, k) && !is_pending(p.j, k))
        chain = true;
    }
    if (chain) continue;
    const ModVec& gi = G[p.i];
    const ModVec& gj = G[p.j];
    ModVec s = zero_vec(B, static_cast<int>(gi.size()));
    sub_mul(s, Q(-1) / gi[p.comp].lead().c, p.l / gi[p.comp].lead().m, gi, p.comp);
    sub_mul(s, Q(1) / gj[p.comp].lead().c, p.l / gj[p.comp].lead().m, gj, p.comp);
    top_reduce(s, G, comps, identity_prio(G.size()), static_cast<int>(s.size()));
    int c = lead_comp(s);
    if (c < 0) continue;
    make_monic(s);
    G.push_back(std::move(s));
    comps.push_back(c);
    add_pairs(G.size() - 1);
  }

  // Minimize, then interreduce.
  std::vector<ModVec> M;
  std::vector<int> mc;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || comps[i] != comps[j]) continue;
      const Mono& a = G[j][comps[j]].lead().m;
      const Mono& b = G[i][comps[i]].lead().m;
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) {
      M.push_back(G[i]);
      mc.push_back(comps[i]);
    }
  }
  std::vector<ModVec> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<ModVec> others;
    std::vector<int> oc;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) {
        others.push_back(M[j]);
        oc.push_back(mc[j]);
      }
    ModVec v = M[i];
    // Keep the leading term, reduce the rest.
    int c = mc[i];
    Term lt = v[c].lead();
    v[c].sub_mul_term(Q(1), Mono{}, Poly::monomial(B, lt.m, lt.c));
    full_reduce(v, others, oc);
    v[c] += Poly::monomial(B, lt.m, lt.c);
    make_monic(v);
    R.push_back(std::move(v));
  }
  std::stable_sort(R.begin(), R.end(), [&](const ModVec& a, const ModVec& b) {
    int ca = lead_comp(a), cb = lead_comp(b);
    if (ca != cb) return ca < cb;
    return ring.cmp(a[ca].lead().m, b[cb].lead().m) < 0;
  });
  return R;
}

// Generators of the quotient ideal placed in each of the first `rank` components.
void append_ideal(std::vector<ModVec>& gens, const RingPtr& r, int rank, int width) {
  if (!r->is_quotient()) return;
  RingPtr B = r->base();
  for (int k = 0; k < rank; ++k)
    for (const auto& g : r->ideal_basis()) {
      ModVec v = zero_vec(B, width);
      v[k] = g;
      gens.push_back(std::move(v));
    }
}

int max_degree(const ModVec& v) {
  int d = -1;
  for (const auto& p : v) d = std::max(d, p.total_degree());
  return d;
}

}  // namespace

std::vector<ModVec> module_groebner(const RingPtr& base, int rank, std::vector<ModVec> gens) {
  for (auto& g : gens)
    if (static_cast<int>(g.size()) != rank) throw Error("module element has wrong rank");
  return groebner_impl(base, std::move(gens));
}

bool in_submodule(const ModVec& v, const std::vector<ModVec>& gens, const RingPtr& r, int rank) {
  RingPtr B = r->base();
  std::vector<ModVec> all;
  for (const auto& g : gens) {
    ModVec w;
    for (const auto& p : g) w.push_back(p.lift().in_ring(B));
    all.push_back(std::move(w));
  }
  append_ideal(all, r, rank, rank);
  std::vector<ModVec> G = groebner_impl(B, std::move(all));
  std::vector<int> comps;
  for (const auto& g : G) comps.push_back(lead_comp(g));
  ModVec w;
  for (const auto& p : v) w.push_back(p.lift().in_ring(B));
  top_reduce(w, G, comps, identity_prio(G.size()), rank);
  return is_zero(w);
}

// ---------------------------------------------------------------- lifting and syzygies

Lifter::Lifter(const FreeModuleMap& n, std::uint64_t seed) : n_(n), base_(n.ring()->base()) {
  const int r = n.rows(), t = n.cols();
  std::vector<ModVec> gens;
  for (int j = 0; j < t; ++j) {
    ModVec v = zero_vec(base_, r + t);
    for (int i = 0; i < r; ++i) v[i] = n.at(i, j).lift();
    v[r + j] = Poly::constant(base_, 1);
    gens.push_back(std::move(v));
  }
  append_ideal(gens, n.ring(), r, r + t);
  gb_ = groebner_impl(base_, std::move(gens));

  priority_ = identity_prio(gb_.size());
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(priority_.begin(), priority_.end(), rng);
  }

  // Kernel: basis elements with vanishing first part.
  std::vector<ModVec> cand;
  for (const auto& g : gb_) {
    if (lead_comp(g) < r) continue;
    ModVec c;
    for (int j = 0; j < t; ++j) c.push_back(g[r + j].in_ring(n.ring()));
    if (!oidforge::is_zero(c)) cand.push_back(std::move(c));
  }
  std::stable_sort(cand.begin(), cand.end(),
                   [](const ModVec& a, const ModVec& b) { return max_degree(a) < max_degree(b); });
  for (auto& c : cand) {
    if (!kernel_.empty() && in_submodule(c, kernel_, n.ring(), t)) continue;
    kernel_.push_back(std::move(c));
  }
  // Greedy pruning can leave generators made redundant by later ones; sweep once more.
  for (std::size_t i = kernel_.size(); i-- > 0;) {
    std::vector<ModVec> rest;
    for (std::size_t j = 0; j < kernel_.size(); ++j)
      if (j != i) rest.push_back(kernel_[j]);
    if (!rest.empty() && in_submodule(kernel_[i], rest, n.ring(), t))
      kernel_.erase(kernel_.begin() + static_cast<long>(i));
  }
  if (seed != 0 && !kernel_.empty()) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> coef(-2, 2);
    shift_ = zero_vec(n.ring(), t);
    for (const auto& k : kernel_) {
      int c = coef(rng);
      if (c == 0) continue;
      for (int j = 0; j < t; ++j) shift_[j] += Q(c) * k[j];
    }
  }
}

std::optional<ModVec> Lifter::lift(const ModVec& v) const {
  const int r = n_.rows(), t = n_.cols();
  if (static_cast<int>(v.size()) != r) throw Error("lift: vector length mismatch");
  ModVec w = zero_vec(base_, r + t);
  for (int i = 0; i < r; ++i) w[i] = v[i].lift().in_ring(base_);
  std::vector<int> comps;
  for (const auto& g : gb_) comps.push_back(lead_comp(g));
  top_reduce(w, gb_, comps, priority_, r);
  int c = lead_comp(w);
  if (c >= 0 && c < r) return std::nullopt;
  ModVec out;
  for (int j = 0; j < t; ++j) out.push_back((-w[r + j]).in_ring(n_.ring()));
  if (!shift_.empty() && !oidforge::is_zero(v))
    for (int j = 0; j < t; ++j) out[j] += shift_[j];
  return out;
}

FreeModuleMap syzygies(const FreeModuleMap& m) {
  Lifter L(m);
  FreeModuleMap s = FreeModuleMap::from_columns(m.ring(), m.cols(), L.kernel());
  s.target_level = m.source_level;
  s.source_level = m.source_level + 1;
  return s;
}

std::optional<ModVec> lift(const FreeModuleMap& n, const ModVec& v, std::uint64_t seed) {
  return Lifter(n, seed).lift(v);
}

}  // namespace oidforge

#include "oidforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "oidforge/errors.hpp"

namespace oidforge {

std::string to_string(const Q& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  Q q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- monomials

bool Mono::divides(const Mono& o) const {
  if (deg > o.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::var(int i, int power) {
  Mono m;
  m.e[i] = static_cast<std::uint16_t>(power);
  m.deg = static_cast<std::uint32_t>(power);
  return m;
}

Mono operator*(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  return m;
}

Mono operator/(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  m.deg = a.deg - b.deg;
  return m;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono m;
  for (int i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

bool coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

int MonomialOrder::compare(const Mono& a, const Mono& b, int nvars) const {
  auto var_at = [&](int k) { return priority.empty() ? k : priority[k]; };
  if (kind == OrderKind::lex) {
    for (int k = 0; k < nvars; ++k) {
      int v = var_at(k);
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    }
    return 0;
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int k = nvars - 1; k >= 0; --k) {
    int v = var_at(k);
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "grevlex") return {OrderKind::grevlex, {}};
  if (name == "lex") return {OrderKind::lex, {}};
  throw ParseError("unknown monomial order '" + name + "'");
}

std::string MonomialOrder::name() const { return kind == OrderKind::lex ? "lex" : "grevlex"; }

// ---------------------------------------------------------------- rings

RingPtr Ring::make(std::vector<std::string> vars, MonomialOrder order) {
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
  if (!order.priority.empty()) {
    auto p = order.priority;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != static_cast<int>(i) || p.size() != vars.size())
        throw Error("variable priority is not a permutation");
  }
  std::shared_ptr<Ring> r(new Ring());
  r->vars_ = std::move(vars);
  r->order_ = std::move(order);
  return r;
}

RingPtr Ring::quotient(const RingPtr& base, const std::vector<Poly>& ideal) {
  if (base->is_quotient()) {
    std::vector<Poly> all = base->ideal_basis();
    for (const auto& g : ideal) all.push_back(g.lift());
    return quotient(base->base(), all);
  }
  std::vector<Poly> gens;
  for (const auto& g : ideal) {
    if (!same_ring(g.ring(), base) && !g.is_zero()) throw RingMismatch();
    if (!g.is_zero()) gens.push_back(g);
  }
  std::shared_ptr<Ring> r(new Ring());
  r->vars_ = base->vars_;
  r->order_ = base->order_;
  r->base_ = base;
  r->ideal_ = groebner(gens);
  return r;
}

RingPtr Ring::base() const { return base_ ? base_ : shared_from_this(); }

bool Ring::is_zero_ring() const { return ideal_.size() == 1 && ideal_[0].is_constant(); }

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

bool Ring::same(const Ring& o) const {
  if (this == &o) return true;
  if (vars_ != o.vars_ || !(order_ == o.order_) || is_quotient() != o.is_quotient()) return false;
  if (!is_quotient()) return true;
  if (ideal_.size() != o.ideal_.size()) return false;
  for (std::size_t i = 0; i < ideal_.size(); ++i) {
    const auto& a = ideal_[i].terms();
    const auto& b = o.ideal_[i].terms();
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[k].m == b[k].m) || a[k].c != b[k].c) return false;
  }
  return true;
}

RingPtr Ring::with_order(const MonomialOrder& order) const {
  auto nb = make(vars_, order);
  if (!is_quotient()) return nb;
  std::vector<Poly> gens;
  for (const auto& g : ideal_) gens.push_back(Poly::from_terms(nb, g.terms()));
  return quotient(nb, gens);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

namespace {

RingPtr common_ring(const Poly& a, const Poly& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring()) return a.ring();
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
  return a.ring();
}

// Merge two descending term lists: a + s*b.
std::vector<Term> merge_add(const Ring& R, const std::vector<Term>& a, const std::vector<Term>& b,
                            int s) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : R.cmp(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (s < 0) out.back().c = -out.back().c;
    } else {
      Q v = s > 0 ? Q(a[i].c + b[j].c) : Q(a[i].c - b[j].c);
      if (sgn(v) != 0) out.push_back({a[i].m, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- polynomials

Poly Poly::constant(const RingPtr& r, const Q& c) {
  Poly p(r);
  if (sgn(c) != 0) p.terms_.push_back({Mono{}, c});
  p.normalize();
  return p;
}

Poly Poly::variable(const RingPtr& r, int i) { return monomial(r, Mono::var(i), Q(1)); }

Poly Poly::monomial(const RingPtr& r, const Mono& m, const Q& c) {
  Poly p(r);
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  p.normalize();
  return p;
}

Poly Poly::from_terms(const RingPtr& r, std::vector<Term> terms) {
  Poly p(r);
  const Ring& R = *r;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.cmp(a.m, b.m) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m)
      p.terms_.back().c += t.c;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return sgn(t.c) == 0; });
  p.normalize();
  return p;
}

void Poly::normalize() {
  if (!ring_ || !ring_->is_quotient() || terms_.empty()) return;
  Poly b(ring_->base());
  b.terms_ = std::move(terms_);
  terms_ = normal_form(b, ring_->ideal_basis()).terms_;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0);
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.c = -t.c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  ring_ = common_ring(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_add(*ring_, terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  ring_ = common_ring(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_add(*ring_, terms_, o.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  RingPtr r = common_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(r);
  if (b.terms_.size() == 1 && b.terms_[0].m.deg == 0) return b.terms_[0].c * a;
  if (a.terms_.size() == 1 && a.terms_[0].m.deg == 0) return a.terms_[0].c * b;
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.m * t.m, s.c * t.c});
  return Poly::from_terms(r, std::move(prod));
}

Poly operator*(const Q& c, const Poly& p) {
  Poly out(p.ring_);
  if (sgn(c) == 0) return out;
  out.terms_ = p.terms_;
  for (auto& t : out.terms_) t.c *= c;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

Poly Poly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.m.e[var] == 0) continue;
    Term d{t.m, t.c * t.m.e[var]};
    d.m.e[var] -= 1;
    d.m.deg -= 1;
    out.push_back(std::move(d));
  }
  Poly p(ring_);
  if (!ring_ || !ring_->is_quotient()) {
    p.terms_ = std::move(out);  // derivative of a sorted list stays sorted
    return p;
  }
  return from_terms(ring_, std::move(out));
}

Q Poly::evaluate(const std::vector<Q>& point) const {
  Q s = 0;
  for (const auto& t : terms_) {
    Q v = t.c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
    }
    s += v;
  }
  return s;
}

Poly Poly::lift() const {
  if (!ring_ || !ring_->is_quotient()) return *this;
  Poly p(ring_->base());
  p.terms_ = terms_;
  return p;
}

Poly Poly::in_ring(const RingPtr& r) const {
  if (same_ring(ring_, r)) return *this;
  return from_terms(r, terms_);
}

void Poly::sub_mul_term(const Q& c, const Mono& m, const Poly& g) {
  if (!ring_) ring_ = g.ring_;
  std::vector<Term> sg;
  sg.reserve(g.terms_.size());
  for (const auto& t : g.terms_) sg.push_back({t.m * m, t.c * c});
  terms_ = merge_add(*ring_, terms_, sg, -1);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Q a = abs(t.c);
    if (sgn(t.c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool need_star = false;
    if (a != 1 || t.m.deg == 0) {
      os << to_string(a);
      need_star = true;
    }
    for (int i = 0; i < (ring_ ? ring_->nvars() : 0); ++i) {
      if (t.m.e[i] == 0) continue;
      if (need_star) os << "*";
      os << ring_->vars()[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& r, const std::string& s) : r_(r), s_(s) {}

  Poly run() {
    Poly p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("polynomial '" + s_ + "': " + what + " at offset " + std::to_string(i_));
  }

  Poly expr() {
    Poly acc(r_);
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        break;
      }
      Poly t = term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    return acc;
  }

  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, i_ - start));
      Poly out = Poly::constant(r_, 1);
      for (int k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  Poly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        std::size_t ds = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (ds == i_) fail("expected denominator");
      }
      return Poly::constant(r_, parse_rational(s_.substr(start, i_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      std::string name = s_.substr(start, i_ - start);
      int v = r_->var_index(name);
      if (v < 0) fail("unknown variable '" + name + "'");
      return Poly::variable(r_, v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr r_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

Poly Poly::parse(const RingPtr& r, const std::string& text) { return PolyParser(r, text).run(); }

// ---------------------------------------------------------------- division, Groebner

Division normal_form_with_cofactors(const Poly& f, const std::vector<Poly>& basis) {
  RingPtr R = f.ring();
  for (const auto& g : basis)
    if (!R && g.ring()) R = g.ring();
  Division out;
  if (!R) {
    out.remainder = f;
    out.cofactors.assign(basis.size(), Poly());
    return out;
  }
  RingPtr B = R->base();
  std::vector<Poly> G;
  G.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.ring() && !same_ring(g.ring()->base(), B)) throw RingMismatch();
    G.push_back(g.lift());
  }
  out.cofactors.assign(G.size(), Poly(B));
  std::vector<std::vector<Term>> cof(G.size());
  std::vector<Term> rem;
  Poly p = f.lift();
  if (!p.ring()) p = Poly(B);
  std::vector<Term> work = p.terms();
  std::size_t start = 0;
  const Ring& ring = *B;
  while (start < work.size()) {
    const Term& lt = work[start];
    std::size_t k = 0;
    for (; k < G.size(); ++k)
      if (!G[k].is_zero() && G[k].lead().m.divides(lt.m)) break;
    if (k == G.size()) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    Q c = lt.c / G[k].lead().c;
    Mono m = lt.m / G[k].lead().m;
    cof[k].push_back({m, c});
    std::vector<Term> sg;
    sg.reserve(G[k].size());
    for (const auto& t : G[k].terms()) sg.push_back({t.m * m, t.c * c});
    std::vector<Term> tail(work.begin() + static_cast<long>(start), work.end());
    work = merge_add(ring, tail, sg, -1);
    start = 0;
  }
  out.remainder = Poly::from_terms(B, std::move(rem));
  for (std::size_t k = 0; k < G.size(); ++k) out.cofactors[k] = Poly::from_terms(B, std::move(cof[k]));
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis) {
  if (f.is_zero() || basis.empty()) return f;
  RingPtr B = f.ring()->base();
  std::vector<Term> rem;
  std::vector<Term> work = f.terms();
  std::size_t start = 0;
  const Ring& ring = *B;
  while (start < work.size()) {
    const Term& lt = work[start];
    const Poly* g = nullptr;
    for (const auto& b : basis)
      if (!b.is_zero() && b.lead().m.divides(lt.m)) {
        g = &b;
        break;
      }
    if (!g) {
      rem.push_back(lt);
      ++start;
      continue;
    }
    Q c = lt.c / g->lead().c;
    Mono m = lt.m / g->lead().m;
    std::vector<Term> sg;
    sg.reserve(g->size());
    for (const auto& t : g->terms()) sg.push_back({t.m * m, t.c * c});
    std::vector<Term> tail(work.begin() + static_cast<long>(start), work.end());
    work = merge_add(ring, tail, sg, -1);
    start = 0;
  }
  return Poly::from_terms(B, std::move(rem));
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  Mono l = lcm(f.lead().m, g.lead().m);
  Poly s = f.lift();
  s = (1 / f.lead().c) * s;
  Poly a(s.ring());
  a.sub_mul_term(-1, l / f.lead().m, s);
  a.sub_mul_term(1 / g.lead().c, l / g.lead().m, g.lift());
  return a;
}

namespace {

Poly monic(Poly p) {
  if (p.is_zero()) return p;
  Q c = 1 / p.lead().c;
  return c * p;
}

}  // namespace

std::vector<Poly> groebner(const std::vector<Poly>& gens) {
  std::vector<Poly> G;
  RingPtr B;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!B) B = g.ring()->base();
    Poly h = normal_form(g.lift(), G);
    if (!h.is_zero()) G.push_back(monic(h));
  }
  if (G.empty()) return {};
  const Ring& ring = *B;

  struct Pair {
    std::size_t i, j;
    Mono l;
  };
  std::vector<Pair> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(G[i].lead().m, G[j].lead().m)});
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);

  auto pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& p : pairs)
      if (p.i == a && p.j == b) return true;
    return false;
  };

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Mono& a = pairs[k].l;
      const Mono& b = pairs[best].l;
      if (a.deg < b.deg || (a.deg == b.deg && ring.cmp(a, b) < 0)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (coprime(G[p.i].lead().m, G[p.j].lead().m)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (G[k].lead().m.divides(p.l) && !pending(p.i, k) && !pending(p.j, k)) chain = true;
    }
    if (chain) continue;
    Poly h = normal_form(s_polynomial(G[p.i], G[p.j]), G);
    if (h.is_zero()) continue;
    G.push_back(monic(h));
    add_pairs(G.size() - 1);
  }

  // Minimize, then interreduce.
  std::vector<Poly> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Mono& a = G[j].lead().m;
      const Mono& b = G[i].lead().m;
      if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }
  std::vector<Poly> R;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    R.push_back(monic(normal_form(M[i], others)));
  }
  std::sort(R.begin(), R.end(),
            [&](const Poly& a, const Poly& b) { return ring.cmp(a.lead().m, b.lead().m) < 0; });
  return R;
}

std::vector<Poly> groebner(const std::vector<Poly>& gens, const MonomialOrder& order) {
  RingPtr B;
  for (const auto& g : gens)
    if (g.ring()) B = g.ring()->base();
  if (!B) return {};
  RingPtr R = B->with_order(order);
  std::vector<Poly> moved;
  for (const auto& g : gens) moved.push_back(Poly::from_terms(R, g.lift().terms()));
  return groebner(moved);
}

bool is_groebner(const std::vector<Poly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

Poly univariate_gcd(const Poly& a, const Poly& b, int var) {
  (void)var;
  Poly x = a.lift(), y = b.lift();
  while (!y.is_zero()) {
    Poly r = normal_form(x, {y});
    x = y;
    y = r;
  }
  return monic(x);
}

Poly divide_exact(const Poly& a, const Poly& b) {
  Division d = normal_form_with_cofactors(a, {b});
  if (!d.remainder.is_zero()) throw Error("inexact division of " + a.str() + " by " + b.str());
  return d.cofactors[0];
}

// ---------------------------------------------------------------- vector fields

VectorField VectorField::zero(const RingPtr& r) {
  return VectorField(std::vector<Poly>(static_cast<std::size_t>(r->nvars()), Poly(r)));
}

VectorField VectorField::partial(const RingPtr& r, int var, const Poly& f) {
  VectorField X = zero(r);
  X.coeff_[var] = f;
  return X;
}

bool VectorField::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const Poly& p) { return p.is_zero(); });
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (coeff_.empty()) coeff_.resize(o.coeff_.size());
  for (std::size_t a = 0; a < coeff_.size(); ++a) coeff_[a] += o.coeff_[a];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (coeff_.empty()) coeff_.resize(o.coeff_.size());
  for (std::size_t a = 0; a < coeff_.size(); ++a) coeff_[a] -= o.coeff_[a];
  return *this;
}

VectorField operator*(const Poly& f, const VectorField& X) {
  VectorField Y = X;
  for (auto& c : Y.coeff_) c = f * c;
  return Y;
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.coeff_ == b.coeff_;
}

std::string VectorField::str() const {
  std::string s = "[";
  for (std::size_t a = 0; a < coeff_.size(); ++a) s += (a ? ", " : "") + coeff_[a].str();
  return s + "]";
}

Poly apply_vf(const VectorField& X, const Poly& f) {
  RingPtr R = f.ring();
  for (const auto& c : X.coeff())
    if (!R) R = c.ring();
  if (!R) return Poly();
  Poly fl = f.lift();
  Poly s(R->base());
  for (int a = 0; a < X.dim(); ++a) {
    if (X[a].is_zero()) continue;
    if (X[a].ring() && f.ring() && !same_ring(X[a].ring(), f.ring())) throw RingMismatch();
    s += X[a].lift() * fl.derivative(a);
  }
  return s.in_ring(R);
}

VectorField commutator(const VectorField& X, const VectorField& Y) {
  int d = std::max(X.dim(), Y.dim());
  std::vector<Poly> c(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) c[a] = apply_vf(X, Y[a]) - apply_vf(Y, X[a]);
  return VectorField(std::move(c));
}

}  // namespace oidforge

#include "oidforge/brackets.hpp"

#include "oidforge/errors.hpp"

namespace oidforge {

namespace {

RingPtr ring_of(const std::vector<Element>& args) {
  for (const auto& a : args)
    for (const auto& [g, c] : a)
      if (c.ring()) return c.ring();
  return nullptr;
}

std::vector<int> degrees_of(const Word& w) {
  std::vector<int> d;
  for (const auto& g : w) d.push_back(g.degree());
  return d;
}

Word pick(const Word& w, const std::vector<int>& pos) {
  Word out;
  for (int p : pos) out.push_back(w[p]);
  return out;
}

Element value_on(const MapView& m, const Word& letters) {
  GradedWord cw = GradedWord::canonical(letters);
  if (cw.sign == 0) return {};
  Element v = m.on_word(cw.letters);
  return cw.sign > 0 ? v : negate(v);
}

void expand(const MapView& m, const std::vector<Element>& args, std::size_t i, Word& letters,
            const Poly& coeff, Element& out) {
  if (i == args.size()) {
    add_scaled(out, coeff, value_on(m, letters));
    return;
  }
  for (const auto& [g, c] : args[i]) {
    letters.push_back(g);
    expand(m, args, i + 1, letters, coeff * c, out);
    letters.pop_back();
  }
}

Element anchor_terms(const FreeResolution& res, const Element& a, const Element& b) {
  // l2(f x, g y) = f g l2(x,y) + f rho(x)[g] y + (-1)^{|x||y|} g rho(y)[f] x
  Element out;
  for (const auto& [x, f] : a)
    for (const auto& [y, g] : b) {
      if (x.level == 1 && !g.is_constant()) {
        Poly t = f * apply_vf(res.anchor_of(x.index), g);
        add_term(out, y, t);
      }
      if (y.level == 1 && !f.is_constant()) {
        Poly t = g * apply_vf(res.anchor_of(y.index), f);
        if (x.odd()) t = -t;
        add_term(out, x, t);
      }
    }
  return out;
}

}  // namespace

MapView taylor_view(const TaylorMap& t, const FreeResolution* leibniz) {
  MapView m;
  m.arity = t.arity;
  m.degree = t.shift;
  m.on_word = [&t](const Word& w) { return t.at(w); };
  m.leibniz = leibniz;
  return m;
}

MapView differential_view(const LieInftyAlgebroid& alg, bool augmented) {
  MapView m;
  m.arity = 1;
  m.degree = 1;
  m.on_word = [&alg, augmented](const Word& w) { return alg.differential(w[0], augmented); };
  return m;
}

MapView bracket_view(const LieInftyAlgebroid& alg, int k) {
  if (k == 1) return differential_view(alg);
  MapView m = taylor_view(alg.table(k), k == 2 ? &alg.res : nullptr);
  m.arity = k;
  m.degree = 1;
  return m;
}

Element evaluate(const MapView& m, const std::vector<Element>& args) {
  if (static_cast<int>(args.size()) != m.arity)
    throw ArityError("map of arity " + std::to_string(m.arity) + " given " +
                     std::to_string(args.size()) + " arguments");
  Element out;
  RingPtr r = ring_of(args);
  if (!r) return out;
  Word letters;
  expand(m, args, 0, letters, Poly::constant(r, 1), out);
  if (m.leibniz && m.arity == 2)
    for (const auto& [g, c] : anchor_terms(*m.leibniz, args[0], args[1])) add_term(out, g, c);
  return out;
}

Element eval_bracket(const LieInftyAlgebroid& alg, int k, const std::vector<Element>& args) {
  if (k < 1 || k > alg.arity_bound())
    throw ArityError("bracket arity " + std::to_string(k) + " outside 1.." +
                     std::to_string(alg.arity_bound()));
  return evaluate(bracket_view(alg, k), args);
}

Element compose(const MapView& p, const MapView& r, const Word& w) {
  const int n = static_cast<int>(w.size());
  if (p.arity + r.arity - 1 != n) throw ArityError("composition arity mismatch");
  Element out;
  for_each_block_shuffle(degrees_of(w), {r.arity, n - r.arity},
                         [&](const std::vector<std::vector<int>>& blocks, int sign) {
                           Element inner = value_on(r, pick(w, blocks[0]));
                           if (inner.empty()) return;
                           std::vector<Element> args{std::move(inner)};
                           RingPtr ring = args[0].begin()->second.ring();
                           for (int pos : blocks[1]) args.push_back(gen_element(ring, w[pos]));
                           add_scaled(out, Q(sign), evaluate(p, args));
                         });
  return out;
}

std::vector<Word> window_words(const std::vector<int>& ranks, int arity, int shift, int lo, int hi) {
  std::vector<Word> out;
  // output level = -(sum + shift)
  for (int level = lo; level <= hi; ++level) {
    auto ws = enumerate_words(ranks, arity, -level - shift);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

TaylorMap rn_bracket(const MapView& p, const MapView& r, const std::vector<int>& ranks) {
  TaylorMap out;
  out.arity = p.arity + r.arity - 1;
  out.shift = p.degree + r.degree;
  const int L = static_cast<int>(ranks.size());
  const bool both_odd = (p.degree & 1) && (r.degree & 1);
  for (const Word& w : window_words(ranks, out.arity, out.shift, 1, L)) {
    Element v = compose(p, r, w);
    add_scaled(v, Q(both_odd ? 1 : -1), compose(r, p, w));
    out.set(w, std::move(v));
  }
  return out;
}

TaylorMap jacobiator(const LieInftyAlgebroid& alg) {
  const int r1 = alg.res.rank(1);
  for (int i = 0; i < r1; ++i)
    for (int j = i + 1; j < r1; ++j) {
      Element b = alg.table(2).at({Gen{1, i}, Gen{1, j}});
      VectorField lhs = alg.anchor(b);
      VectorField rhs = commutator(alg.res.anchor_of(i), alg.res.anchor_of(j));
      if (!(lhs == rhs))
        throw AnchorNotMorphism(gen_name(1, i) + "," + gen_name(1, j) + ": " + (lhs - rhs).str());
    }
  MapView l2 = bracket_view(alg, 2);
  TaylorMap out;
  out.arity = 3;
  out.shift = 2;
  for (const Word& w : window_words(alg.ranks(), 3, 2, 1, alg.length())) out.set(w, compose(l2, l2, w));
  return out;
}

std::string CheckReport::str() const {
  if (ok) return "ok (" + std::to_string(words_checked) + " words)";
  return identity + " fails on " + word_str(witness) + ": " + detail;
}

CheckReport check_algebroid(const LieInftyAlgebroid& alg, int max_arity) {
  CheckReport rep;
  auto fail = [&rep](std::string id, Word w, std::string detail) {
    rep.ok = false;
    rep.identity = std::move(id);
    rep.witness = std::move(w);
    rep.detail = std::move(detail);
    return rep;
  };
  const int L = alg.length();
  const int K = alg.arity_bound();
  for (const auto& [k, t] : alg.brackets)
    if (k > K && !t.empty()) return fail("arity bound", t.values.begin()->first, "table above L+1");

  // Complex property, including the anchor.
  for (int level = 2; level <= L; ++level)
    for (int j = 0; j < alg.res.rank(level); ++j) {
      Gen g{level, j};
      Element dd = alg.differential(alg.differential(g), true);
      ++rep.words_checked;
      if (!dd.empty()) return fail(level == 2 ? "rho o l1" : "l1 o l1", {g}, element_str(dd));
    }

  // Anchor is a morphism of brackets.
  const int r1 = alg.res.rank(1);
  for (int i = 0; i < r1; ++i)
    for (int j = i + 1; j < r1; ++j) {
      Word w{Gen{1, i}, Gen{1, j}};
      VectorField lhs = alg.anchor(alg.table(2).at(w));
      VectorField rhs = commutator(alg.res.anchor_of(i), alg.res.anchor_of(j));
      ++rep.words_checked;
      if (!(lhs == rhs)) return fail("anchor morphism", w, (lhs - rhs).str());
    }

  // Higher Jacobi: sum_{i+j=n+1} l_j o l_i on every word with output in E.
  int top = max_arity < 0 ? L + 2 : std::min(max_arity, L + 2);
  std::vector<MapView> views;
  for (int k = 0; k <= K; ++k) views.push_back(k == 0 ? MapView{} : bracket_view(alg, k));
  auto present = [&](int k) { return k == 1 || (k <= K && !alg.table(k).empty()); };
  for (int n = 2; n <= top; ++n) {
    for (const Word& w : window_words(alg.ranks(), n, 2, 1, L)) {
      Element total;
      for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        if (!present(i) || !present(j)) continue;
        add_scaled(total, Q(1), compose(views[j], views[i], w));
      }
      ++rep.words_checked;
      if (!total.empty()) return fail("Jacobi n=" + std::to_string(n), w, element_str(total));
    }
  }
  return rep;
}

CheckReport check_morphism(const MorphismTaylor& m, int cap) {
  CheckReport rep;
  auto fail = [&rep](std::string id, Word w, std::string detail) {
    rep.ok = false;
    rep.identity = std::move(id);
    rep.witness = std::move(w);
    rep.detail = std::move(detail);
    return rep;
  };
  const LieInftyAlgebroid& src = *m.source;
  const LieInftyAlgebroid& tgt = *m.target;
  if (!same_ring(src.ring(), tgt.ring())) throw RingMismatch();
  if (cap < 0) cap = static_cast<int>(m.phi.size()) - 1;

  auto phi_view = [&](int r) {
    static const TaylorMap empty;
    MapView v = taylor_view(r < static_cast<int>(m.phi.size()) ? m.phi[r] : empty);
    v.arity = r + 1;
    v.degree = 0;
    return v;
  };

  // Anchor compatibility on E'_{-1}.
  for (int j = 0; j < src.res.rank(1); ++j) {
    Gen g{1, j};
    VectorField lhs = tgt.anchor(phi_view(0).on_word({g}));
    VectorField rhs = src.res.anchor_of(j);
    ++rep.words_checked;
    if (!(lhs == rhs)) return fail("rho o Phi0 = rho'", {g}, (lhs - rhs).str());
  }

  const int Lt = tgt.length();
  const int Kt = tgt.arity_bound();
  for (int n = 1; n <= cap + 1; ++n) {
    for (const Word& w : window_words(src.ranks(), n, 1, 1, Lt)) {
      Element lhs;
      for (int i = 1; i <= n; ++i) {
        if (n - i > cap) continue;
        add_scaled(lhs, Q(1), compose(phi_view(n - i), bracket_view(src, i), w));
      }
      Element rhs;
      const std::vector<int> deg = degrees_of(w);
      Q fact = 1;
      for (int k = 1; k <= std::min(n, Kt); ++k) {
        fact *= k;
        MapView lk = bracket_view(tgt, k);
        if (k > 1 && tgt.table(k).empty()) continue;
        for (const auto& sizes : compositions(n, k)) {
          bool ok = true;
          for (int s : sizes) ok = ok && s - 1 <= cap;
          if (!ok) continue;
          for_each_block_shuffle(deg, sizes, [&](const std::vector<std::vector<int>>& blocks, int sign) {
            std::vector<Element> args;
            for (const auto& b : blocks) {
              Element v = value_on(phi_view(static_cast<int>(b.size()) - 1), pick(w, b));
              if (v.empty()) return;
              args.push_back(std::move(v));
            }
            add_scaled(rhs, Q(sign) / fact, evaluate(lk, args));
          });
        }
      }
      ++rep.words_checked;
      Element diff = lhs;
      add_scaled(diff, Q(-1), rhs);
      if (!diff.empty()) return fail("morphism n=" + std::to_string(n), w, element_str(diff));
    }
  }
  return rep;
}

}  // namespace oidforge

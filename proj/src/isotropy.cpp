#include "oidforge/isotropy.hpp"

#include "oidforge/errors.hpp"

namespace oidforge {

namespace {

QMatrix evaluate_map(const FreeModuleMap& m, const QVector& point) {
  QMatrix out = zero_matrix(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).evaluate(point);
  return out;
}

// Columns of `im`, then of `extra`; returns coefficients of v, or nothing.
std::optional<QVector> coordinates(const std::vector<QVector>& im, const std::vector<QVector>& extra,
                                   const QVector& v) {
  std::vector<QVector> cols = im;
  cols.insert(cols.end(), extra.begin(), extra.end());
  if (cols.empty()) return is_zero(v) ? std::optional<QVector>(QVector{}) : std::nullopt;
  return solve(from_columns(cols, static_cast<int>(v.size())), v);
}

std::vector<QVector> image_columns(const Specialization& s) {
  std::vector<QVector> out;
  if (s.diffs.empty()) return out;
  const QMatrix& d2 = s.diffs[0];
  for (std::size_t j = 0; j < (d2.empty() ? 0 : d2[0].size()); ++j) {
    QVector c;
    for (const auto& row : d2) c.push_back(row[j]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Specialization specialize(const LieInftyAlgebroid& alg, const QVector& point) {
  const RingPtr& ring = alg.ring();
  if (static_cast<int>(point.size()) != ring->nvars())
    throw Error("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                std::to_string(ring->nvars()) + " variables");
  for (const auto& g : ring->ideal_basis())
    if (sgn(g.evaluate(point)) != 0) throw Error("point does not lie on the zero set of " + g.str());
  Specialization s;
  s.point = point;
  s.ranks = alg.ranks();
  s.anchor = evaluate_map(alg.res.anchor, point);
  for (const auto& d : alg.res.diffs) s.diffs.push_back(evaluate_map(d, point));
  for (const auto& [k, t] : alg.brackets)
    for (const auto& [w, v] : t.values) {
      QElement e;
      for (const auto& [g, c] : v) {
        Q x = c.evaluate(point);
        if (sgn(x) != 0) e[g] = x;
      }
      if (!e.empty()) s.brackets[k][w] = std::move(e);
    }
  const int r1 = alg.res.rank(1);
  s.anchor_kernel = kernel(s.anchor, r1);
  for (std::size_t i = 0; i < s.anchor_kernel.size() && s.kernel_closed; ++i)
    for (std::size_t j = i + 1; j < s.anchor_kernel.size(); ++j)
      if (!is_zero(mat_vec(s.anchor, bracket_at(s, s.anchor_kernel[i], s.anchor_kernel[j])))) {
        s.kernel_closed = false;
        break;
      }
  return s;
}

QVector bracket_at(const Specialization& s, const QVector& u, const QVector& v) {
  const int r1 = s.ranks.empty() ? 0 : s.ranks[0];
  QVector out(static_cast<std::size_t>(r1), Q(0));
  auto it = s.brackets.find(2);
  if (it == s.brackets.end()) return out;
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r1; ++j) {
      if (i == j || sgn(u[i]) == 0 || sgn(v[j]) == 0) continue;
      Word w = i < j ? Word{Gen{1, i}, Gen{1, j}} : Word{Gen{1, j}, Gen{1, i}};
      auto f = it->second.find(w);
      if (f == it->second.end()) continue;
      Q c = u[i] * v[j];
      if (i > j) c = -c;
      for (const auto& [g, x] : f->second)
        if (g.level == 1) out[g.index] += c * x;
    }
  return out;
}

bool IsotropyAlgebra::antisymmetric() const {
  const int n = dimension();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (structure[i][j][k] != -structure[j][i][k]) return false;
  return true;
}

bool IsotropyAlgebra::jacobi_holds() const {
  const int n = dimension();
  auto br = [&](const QVector& a, const QVector& b) {
    QVector out(static_cast<std::size_t>(n), Q(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (sgn(a[i]) == 0 || sgn(b[j]) == 0) continue;
        for (int k = 0; k < n; ++k) out[k] += a[i] * b[j] * structure[i][j][k];
      }
    return out;
  };
  auto unit = [&](int i) {
    QVector e(static_cast<std::size_t>(n), Q(0));
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        QVector s = br(br(unit(i), unit(j)), unit(k));
        QVector t = br(br(unit(j), unit(k)), unit(i));
        QVector u = br(br(unit(k), unit(i)), unit(j));
        for (int c = 0; c < n; ++c)
          if (sgn(s[c] + t[c] + u[c]) != 0) return false;
      }
  return true;
}

IsotropyAlgebra isotropy_lie_algebra(const LieInftyAlgebroid& alg, const QVector& point) {
  Specialization s = specialize(alg, point);
  IsotropyAlgebra g;
  g.point = point;
  const int r1 = s.ranks.empty() ? 0 : s.ranks[0];
  std::vector<QVector> im = image_columns(s);
  // Complement of im(d2) inside ker(rho): kernel vectors that are pivots after the image.
  std::vector<QVector> cols = im;
  cols.insert(cols.end(), s.anchor_kernel.begin(), s.anchor_kernel.end());
  if (!cols.empty()) {
    std::vector<int> piv;
    rref(from_columns(cols, r1), &piv);
    for (int p : piv)
      if (p >= static_cast<int>(im.size())) g.basis.push_back(cols[p]);
  }
  const int n = g.dimension();
  g.structure.assign(static_cast<std::size_t>(n),
                     std::vector<QVector>(static_cast<std::size_t>(n), QVector(static_cast<std::size_t>(n), Q(0))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      QVector b = bracket_at(s, g.basis[i], g.basis[j]);
      auto c = coordinates(im, g.basis, b);
      if (!c) throw Error("bracket of isotropy representatives leaves ker(rho)");
      for (int k = 0; k < n; ++k) g.structure[i][j][k] = (*c)[im.size() + k];
    }
  return g;
}

QVector isotropy_coordinates(const IsotropyAlgebra& g, const Specialization& s, const QVector& v) {
  std::vector<QVector> im = image_columns(s);
  auto c = coordinates(im, g.basis, v);
  if (!c) throw Error("vector is not in ker(rho) at the point");
  return QVector(c->begin() + static_cast<long>(im.size()), c->end());
}

bool is_regular(const LieInftyAlgebroid& alg, const QVector& point) {
  Specialization s = specialize(alg, point);
  int rk = s.diffs.empty() ? 0 : rank(s.diffs[0]);
  return rk == static_cast<int>(s.anchor_kernel.size());
}

Minimality minimality_at(const LieInftyAlgebroid& alg, const QVector& point) {
  Minimality m;
  m.structure = specialize(alg, point);
  m.minimal = true;
  for (const auto& d : m.structure.diffs)
    for (const auto& row : d)
      if (!is_zero(row)) m.minimal = false;
  return m;
}

}  // namespace oidforge

#include "oidforge/resolution.hpp"

#include "oidforge/errors.hpp"

namespace oidforge {

namespace {

ModVec as_vec(const VectorField& X) { return X.coeff(); }

FreeModuleMap anchor_matrix(const RingPtr& r, const std::vector<VectorField>& gens) {
  std::vector<ModVec> cols;
  for (const auto& X : gens) {
    if (X.dim() != r->nvars()) throw Error("vector field has wrong dimension");
    cols.push_back(as_vec(X));
  }
  FreeModuleMap m = FreeModuleMap::from_columns(r, r->nvars(), cols);
  m.source_level = 1;
  m.target_level = 0;
  return m;
}

}  // namespace

FreeModuleMap FreeResolution::diff(int i) const {
  if (i >= 2 && i <= length()) return diffs[i - 2];
  FreeModuleMap z(ring, rank(i - 1), rank(i));
  z.source_level = i;
  z.target_level = i - 1;
  return z;
}

VectorField FreeResolution::anchor_of(int j) const { return VectorField(anchor.column(j)); }

std::vector<VectorField> FreeResolution::generators() const {
  std::vector<VectorField> out;
  for (int j = 0; j < anchor.cols(); ++j) out.push_back(anchor_of(j));
  return out;
}

std::string gen_name(int level, int index) {
  static const char* letters = "efghijklmnopqrstuvwxyz";
  char c = level >= 1 && level <= 22 ? letters[level - 1] : '?';
  return std::string(1, c) + "[" + std::to_string(level) + "," + std::to_string(index + 1) + "]";
}

FreeResolution free_resolution(const FreeModuleMap& presentation, int cap) {
  FreeResolution res;
  res.ring = presentation.ring();
  res.anchor = presentation;
  res.anchor.source_level = 1;
  res.anchor.target_level = 0;
  if (cap < 0) cap = res.ring->nvars() + 1;
  if (presentation.cols() == 0) return res;
  res.ranks.push_back(presentation.cols());
  FreeModuleMap current = res.anchor;
  for (int level = 1;; ++level) {
    FreeModuleMap s = syzygies(current);
    if (s.cols() == 0) break;
    if (level + 1 > cap) throw CapExceeded(cap);
    s.source_level = level + 1;
    s.target_level = level;
    res.ranks.push_back(s.cols());
    res.diffs.push_back(s);
    current = std::move(s);
  }
  return res;
}

FreeResolution free_resolution(const std::vector<VectorField>& gens, const RingPtr& ring) {
  return free_resolution(anchor_matrix(ring, gens));
}

std::string complex_defect(const FreeResolution& res) {
  const int L = res.length();
  if (L >= 2) {
    FreeModuleMap p = res.anchor * res.diff(2);
    for (int j = 0; j < p.cols(); ++j)
      if (!is_zero(p.column(j))) return "rho o d(2) nonzero on " + gen_name(2, j);
  }
  for (int i = 2; i < L; ++i) {
    FreeModuleMap p = res.diff(i) * res.diff(i + 1);
    for (int j = 0; j < p.cols(); ++j)
      if (!is_zero(p.column(j)))
        return "d(" + std::to_string(i) + ") o d(" + std::to_string(i + 1) + ") nonzero on " +
               gen_name(i + 1, j);
  }
  return {};
}

ExactnessCertificate certify_exactness(const FreeResolution& res) {
  std::string defect = complex_defect(res);
  if (!defect.empty()) throw NotExact(0, defect);
  ExactnessCertificate cert;
  for (int i = 1; i <= res.length(); ++i) {
    const FreeModuleMap& m = i == 1 ? res.anchor : res.diffs[i - 2];
    FreeModuleMap syz = syzygies(m);
    FreeModuleMap next = res.diff(i + 1);
    Lifter lifter(next);
    std::vector<ModVec> cols;
    for (int j = 0; j < syz.cols(); ++j) {
      auto c = lifter.lift(syz.column(j));
      if (!c) throw NotExact(i, str(syz.column(j)));
      cols.push_back(std::move(*c));
    }
    ExactnessLevel lv;
    lv.level = i;
    lv.syzygies = syz;
    lv.lifting = FreeModuleMap::from_columns(res.ring, next.cols(), cols);
    if (cols.empty()) lv.lifting = FreeModuleMap(res.ring, next.cols(), 0);
    cert.levels.push_back(std::move(lv));
  }
  return cert;
}

bool ExactnessCertificate::verify(const FreeResolution& res) const {
  for (const auto& lv : levels) {
    FreeModuleMap prod = res.diff(lv.level + 1) * lv.lifting;
    if (prod.cols() != lv.syzygies.cols()) return false;
    for (int j = 0; j < prod.cols(); ++j)
      if (!is_zero(sub(prod.column(j), lv.syzygies.column(j)))) return false;
  }
  return true;
}

bool in_span(const VectorField& X, const std::vector<VectorField>& gens) {
  RingPtr r;
  for (const auto& p : X.coeff())
    if (p.ring()) r = p.ring();
  if (!r) return true;
  std::vector<ModVec> g;
  for (const auto& Y : gens) g.push_back(as_vec(Y));
  return in_submodule(as_vec(X), g, r, X.dim());
}

std::vector<VectorField> vanishing_generators(const std::vector<Poly>& ideal_gens) {
  std::vector<VectorField> out;
  for (const auto& phi : ideal_gens) {
    const RingPtr& r = phi.ring();
    for (int a = 0; a < r->nvars(); ++a) out.push_back(VectorField::partial(r, a, phi));
  }
  return out;
}

std::vector<VectorField> tangent_generators(const std::vector<Poly>& ideal_gens) {
  if (ideal_gens.empty()) return {};
  const RingPtr r = ideal_gens[0].ring();
  const int d = r->nvars();
  const int k = static_cast<int>(ideal_gens.size());
  // Columns: partial derivatives, then phi_l * e_i for every row i and generator l.
  std::vector<ModVec> cols;
  for (int j = 0; j < d; ++j) {
    ModVec c;
    for (const auto& phi : ideal_gens) c.push_back(phi.derivative(j));
    cols.push_back(std::move(c));
  }
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      ModVec c = zero_vec(r, k);
      c[i] = ideal_gens[l];
      cols.push_back(std::move(c));
    }
  FreeModuleMap m = FreeModuleMap::from_columns(r, k, cols);
  Lifter lifter(m);
  std::vector<VectorField> out;
  for (const auto& s : lifter.kernel()) {
    VectorField X(ModVec(s.begin(), s.begin() + d));
    if (X.is_zero() || in_span(X, out)) continue;
    out.push_back(std::move(X));
  }
  // Drop generators made redundant by later ones.
  for (std::size_t i = out.size(); i-- > 0;) {
    std::vector<VectorField> rest;
    for (std::size_t j = 0; j < out.size(); ++j)
      if (j != i) rest.push_back(out[j]);
    if (!rest.empty() && in_span(out[i], rest)) out.erase(out.begin() + static_cast<long>(i));
  }
  return out;
}

}  // namespace oidforge

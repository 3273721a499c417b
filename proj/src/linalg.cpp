#include "oidforge/linalg.hpp"

namespace oidforge {

QMatrix zero_matrix(int rows, int cols) {
  return QMatrix(static_cast<std::size_t>(rows), QVector(static_cast<std::size_t>(cols), Q(0)));
}

QMatrix rref(QMatrix a, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Q inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Q f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

int rank(const QMatrix& a) {
  std::vector<int> piv;
  rref(a, &piv);
  return static_cast<int>(piv.size());
}

std::vector<QVector> kernel(const QMatrix& a, int cols) {
  std::vector<int> piv;
  QMatrix r = rref(a, &piv);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : piv) is_pivot[c] = 1;
  std::vector<QVector> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(static_cast<std::size_t>(cols), Q(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  QMatrix aug = a;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> piv;
  QMatrix r = rref(aug, &piv);
  QVector x(static_cast<std::size_t>(cols), Q(0));
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == cols) return std::nullopt;
    x[piv[i]] = r[i][cols];
  }
  return x;
}

QVector mat_vec(const QMatrix& a, const QVector& v) {
  QVector out(a.size(), Q(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

QMatrix from_columns(const std::vector<QVector>& cols, int rows) {
  QMatrix m = zero_matrix(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) m[i][j] = cols[j][i];
  return m;
}

}  // namespace oidforge

#pragma once

#include <optional>
#include <vector>

#include "oidforge/poly.hpp"

namespace oidforge {

using QVector = std::vector<Q>;
using QMatrix = std::vector<QVector>;  // row-major

QMatrix zero_matrix(int rows, int cols);
int rank(const QMatrix& a);
// Reduced row echelon form; pivots receives the pivot column of each nonzero row.
QMatrix rref(QMatrix a, std::vector<int>* pivots = nullptr);
// Basis of {v : a v = 0}; `cols` is needed when a has no rows.
std::vector<QVector> kernel(const QMatrix& a, int cols);
// Some x with a x = b, if any.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
QVector mat_vec(const QMatrix& a, const QVector& v);
bool is_zero(const QVector& v);
// Matrix whose columns are the given vectors (each of length `rows`).
QMatrix from_columns(const std::vector<QVector>& cols, int rows);

}  // namespace oidforge

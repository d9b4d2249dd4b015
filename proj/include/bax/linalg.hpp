#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace bax {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;  // row-major

int mat_rank(QMat m);

// one solution of M x = b (free variables set to 0), or nullopt
std::optional<QVec> mat_solve(QMat m, QVec b);

QVec mat_apply(const QMat& m, const QVec& x);

// Generic fraction-free-enough Gaussian elimination over any exact field F.
// F needs: default ctor (= 0), +, -, *, /, is_zero(), copy.
// Returns one solution of M x = b with free variables zero, or nullopt.
template <class F>
std::optional<std::vector<F>> field_solve(std::vector<std::vector<F>> m,
                                          std::vector<F> b) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      F f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
      b[i] = b[i] - f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  std::vector<F> x(cols);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / m[i][pivot_col[i]];
  return x;
}

}  // namespace bax

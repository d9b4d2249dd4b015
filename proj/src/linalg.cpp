#include "bax/linalg.hpp"

#include <cassert>

namespace bax {

int mat_rank(QMat m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<QVec> mat_solve(QMat m, QVec b) {
  const int rows = static_cast<int>(m.size());
  assert(static_cast<int>(b.size()) == rows);
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  QVec x(cols, mpq_class(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / m[i][pivot_col[i]];
  return x;
}

QVec mat_apply(const QMat& m, const QVec& x) {
  QVec y(m.size(), mpq_class(0));
  for (size_t i = 0; i < m.size(); ++i) {
    assert(m[i].size() == x.size());
    for (size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  }
  return y;
}

}  // namespace bax

#include "galelab/linalg.hpp"

#include <utility>

#include "galelab/errors.hpp"

namespace galelab::linalg {

Rref rref(Matrix a) {
  Rref out;
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a.front().size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Rational inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (int j = c; j < cols; ++j) {
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

int rank(const Matrix& a) { return rref(a).rank(); }

Matrix null_space(const Matrix& a) {
  if (a.empty()) return {};
  const int cols = static_cast<int>(a.front().size());
  const Rref r = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivots) is_pivot[c] = true;

  Matrix basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (int row = 0; row < r.rank(); ++row) v[r.pivots[row]] = -r.reduced[row][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_unique(const Matrix& a, const Vector& b) {
  if (a.size() != b.size()) throw DomainError("solve_unique: shape mismatch");
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a.front().size());
  Matrix aug = a;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  const Rref r = rref(std::move(aug));
  if (r.rank() != cols) return std::nullopt;  // rank deficient or inconsistent
  for (int i = 0; i < cols; ++i) {
    if (r.pivots[i] != i) return std::nullopt;
  }
  Vector x(cols);
  for (int i = 0; i < cols; ++i) x[i] = r.reduced[i][cols];
  return x;
}

Rational determinant(Matrix a) {
  const int n = static_cast<int>(a.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (int j = c + 1; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a.front().size(), Vector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

}  // namespace galelab::linalg

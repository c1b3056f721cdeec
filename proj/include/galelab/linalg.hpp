#pragma once

// Exact Gaussian elimination over the rationals. Pivoting always takes the
// first nonzero entry in column order, so every result is a deterministic
// function of the input matrix.

#include <optional>
#include <vector>

#include "galelab/types.hpp"

namespace galelab::linalg {

struct Rref {
  Matrix reduced;           // reduced row echelon form, same shape as the input
  std::vector<int> pivots;  // pivot column of each nonzero row, ascending
  int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(Matrix a);

int rank(const Matrix& a);

/// Basis of {x : a x = 0}, one basis vector per free column in ascending
/// column order, with a 1 in that free column.
Matrix null_space(const Matrix& a);

/// Unique solution of a x = b, or nullopt when the system is inconsistent or
/// a lacks full column rank.
std::optional<Vector> solve_unique(const Matrix& a, const Vector& b);

Rational determinant(Matrix a);

Matrix transpose(const Matrix& a);

}  // namespace galelab::linalg

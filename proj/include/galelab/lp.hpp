#pragma once

// Two-phase primal simplex with Bland's rule on a dense tableau.
//
// Instantiated for Rational (exact, the source of truth) and double (used
// only to guess bases that are then confirmed exactly).

#include <optional>
#include <vector>

#include "galelab/types.hpp"

namespace galelab::lp {

// `stalled` is only ever reported by the double instantiation.
enum class Status { optimal, infeasible, unbounded, stalled };

template <class T>
struct Result {
  Status status = Status::infeasible;
  std::vector<T> x;       // primal solution when status == optimal
  std::vector<T> farkas;  // z with z^T A >= 0, z^T b < 0 when infeasible
  T objective{};
  std::vector<int> basis;  // basic column per surviving row (original columns only)
};

/// Feasibility of {A x = b, x >= 0}. On infeasibility returns a Farkas
/// certificate z with z^T A >= 0 and z^T b < 0.
template <class T>
Result<T> find_feasible(const std::vector<std::vector<T>>& a, const std::vector<T>& b);

/// max c^T x subject to A x = b, x >= 0.
template <class T>
Result<T> maximize(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
                   const std::vector<T>& c);

/// A point y (free sign) with E y = e and L y <= l, or nullopt.
std::optional<Vector> find_point(const Matrix& eq, const Vector& eq_rhs, const Matrix& le,
                                 const Vector& le_rhs);

/// Same system solved in double precision; a heuristic guess only.
std::optional<std::vector<double>> find_point_approx(const std::vector<std::vector<double>>& eq,
                                                     const std::vector<double>& eq_rhs,
                                                     const std::vector<std::vector<double>>& le,
                                                     const std::vector<double>& le_rhs);

}  // namespace galelab::lp

#include "galelab/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "galelab/errors.hpp"

namespace galelab::lp {

namespace {

int sign_of(const Rational& x) { return sgn(x); }

int sign_of(double x) {
  constexpr double eps = 1e-9;
  return x > eps ? 1 : (x < -eps ? -1 : 0);
}

bool is_zero(const Rational& x) { return sgn(x) == 0; }
bool is_zero(double x) { return x == 0.0; }

template <class T>
class Tableau {
 public:
  // Rows are flipped so that b >= 0, then one artificial column per row is
  // appended; the artificials form the starting basis.
  Tableau(const std::vector<std::vector<T>>& a, const std::vector<T>& b)
      : rows_(static_cast<int>(a.size())),
        orig_cols_(rows_ == 0 ? 0 : static_cast<int>(a.front().size())),
        cols_(orig_cols_ + rows_),
        cells_(static_cast<std::size_t>(rows_) * (cols_ + 1)),
        basis_(rows_),
        flipped_(rows_, false),
        alive_(rows_, true) {
    for (int i = 0; i < rows_; ++i) {
      if (static_cast<int>(a[i].size()) != orig_cols_) throw DomainError("lp: ragged matrix");
      flipped_[i] = b[i] < T(0);
      for (int j = 0; j < orig_cols_; ++j) at(i, j) = flipped_[i] ? T(-a[i][j]) : a[i][j];
      at(i, orig_cols_ + i) = T(1);
      rhs(i) = flipped_[i] ? T(-b[i]) : b[i];
      basis_[i] = orig_cols_ + i;
    }
  }

  // Phase 1: minimise the sum of artificials. Returns true when feasible.
  bool phase_one() {
    reduced_.assign(cols_, T(0));
    for (int j = 0; j < orig_cols_; ++j) {
      T s(0);
      for (int i = 0; i < rows_; ++i) s += at(i, j);
      reduced_[j] = -s;
    }
    stalled_ = run(cols_) == Status::stalled;
    T infeas(0);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] >= orig_cols_) infeas += rhs(i);
    }
    return sign_of(infeas) <= 0;
  }

  // Dual of phase 1 read off the artificial reduced costs, mapped back to the
  // unflipped rows and negated into Farkas orientation.
  std::vector<T> farkas() const {
    std::vector<T> z(rows_);
    for (int i = 0; i < rows_; ++i) {
      T y = T(1) - reduced_[orig_cols_ + i];
      if (flipped_[i]) y = -y;
      z[i] = -y;
    }
    return z;
  }

  // Pivots basic artificials out at zero level; rows where that is impossible
  // are redundant and are dropped from the problem.
  void expel_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < orig_cols_) continue;
      int enter = -1;
      for (int j = 0; j < orig_cols_; ++j) {
        if (sign_of(at(i, j)) != 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) {
        alive_[i] = false;
      } else {
        pivot(i, enter);
      }
    }
  }

  bool stalled() const { return stalled_; }

  // Phase 2 on the original columns: maximise c^T x.
  Status phase_two(const std::vector<T>& c) {
    reduced_.assign(cols_, T(0));
    for (int j = 0; j < orig_cols_; ++j) {
      T s = -c[j];
      for (int i = 0; i < rows_; ++i) {
        if (alive_[i] && !is_zero(at(i, j))) s += c[basis_[i]] * at(i, j);
      }
      reduced_[j] = s;
    }
    return run(orig_cols_);
  }

  std::vector<T> solution() const {
    std::vector<T> x(orig_cols_, T(0));
    for (int i = 0; i < rows_; ++i) {
      if (alive_[i] && basis_[i] < orig_cols_) x[basis_[i]] = rhs(i);
    }
    return x;
  }

  std::vector<int> basis() const {
    std::vector<int> out;
    for (int i = 0; i < rows_; ++i) {
      if (alive_[i] && basis_[i] < orig_cols_) out.push_back(basis_[i]);
    }
    return out;
  }

 private:
  T& at(int i, int j) { return cells_[static_cast<std::size_t>(i) * (cols_ + 1) + j]; }
  const T& at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * (cols_ + 1) + j]; }
  T& rhs(int i) { return at(i, cols_); }
  const T& rhs(int i) const { return at(i, cols_); }

  // Bland's rule: lowest-index improving column enters; among ratio ties the
  // lowest-index basic variable leaves.
  Status run(int eligible_cols) {
    // Bland's rule cannot cycle in exact arithmetic; the cap only trips for
    // the double instantiation, whose tolerances void that guarantee.
    const long max_iters = 50L * (rows_ + cols_) + 1000;
    for (long iter = 0; iter < max_iters; ++iter) {
      int enter = -1;
      for (int j = 0; j < eligible_cols; ++j) {
        if (sign_of(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return Status::optimal;
      int leave = -1;
      T best{};
      for (int i = 0; i < rows_; ++i) {
        if (!alive_[i] || sign_of(at(i, enter)) <= 0) continue;
        T ratio = rhs(i) / at(i, enter);
        const int cmp = leave < 0 ? -1 : sign_of(T(ratio - best));
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return Status::unbounded;
      pivot(leave, enter);
    }
    return Status::stalled;
  }

  void pivot(int r, int c) {
    const T inv = T(1) / at(r, c);
    for (int j = 0; j <= cols_; ++j) {
      if (!is_zero(at(r, j))) at(r, j) *= inv;
    }
    at(r, c) = T(1);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || is_zero(at(i, c))) continue;
      const T f = at(i, c);
      for (int j = 0; j <= cols_; ++j) {
        if (!is_zero(at(r, j))) at(i, j) -= f * at(r, j);
      }
      at(i, c) = T(0);
    }
    if (!is_zero(reduced_[c])) {
      const T f = reduced_[c];
      for (int j = 0; j < cols_; ++j) {
        if (!is_zero(at(r, j))) reduced_[j] -= f * at(r, j);
      }
      reduced_[c] = T(0);
    }
    basis_[r] = c;
  }

  int rows_;
  int orig_cols_;
  int cols_;
  std::vector<T> cells_;
  std::vector<int> basis_;
  std::vector<bool> flipped_;
  std::vector<bool> alive_;
  std::vector<T> reduced_;
  bool stalled_ = false;
};

}  // namespace

template <class T>
Result<T> find_feasible(const std::vector<std::vector<T>>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw DomainError("lp: row count mismatch");
  Tableau<T> tab(a, b);
  Result<T> res;
  const bool feasible = tab.phase_one();
  if (tab.stalled()) {
    res.status = Status::stalled;
    return res;
  }
  if (!feasible) {
    res.status = Status::infeasible;
    res.farkas = tab.farkas();
    return res;
  }
  tab.expel_artificials();
  res.status = Status::optimal;
  res.x = tab.solution();
  res.basis = tab.basis();
  return res;
}

template <class T>
Result<T> maximize(const std::vector<std::vector<T>>& a, const std::vector<T>& b,
                   const std::vector<T>& c) {
  if (a.size() != b.size()) throw DomainError("lp: row count mismatch");
  if (!a.empty() && a.front().size() != c.size()) throw DomainError("lp: objective size mismatch");
  Tableau<T> tab(a, b);
  Result<T> res;
  const bool feasible = tab.phase_one();
  if (tab.stalled()) {
    res.status = Status::stalled;
    return res;
  }
  if (!feasible) {
    res.status = Status::infeasible;
    res.farkas = tab.farkas();
    return res;
  }
  tab.expel_artificials();
  if (const Status st = tab.phase_two(c); st != Status::optimal) {
    res.status = st;
    return res;
  }
  res.status = Status::optimal;
  res.x = tab.solution();
  res.basis = tab.basis();
  res.objective = T(0);
  for (std::size_t j = 0; j < c.size(); ++j) res.objective += c[j] * res.x[j];
  return res;
}

template Result<Rational> find_feasible(const Matrix&, const Vector&);
template Result<double> find_feasible(const std::vector<std::vector<double>>&,
                                      const std::vector<double>&);
template Result<Rational> maximize(const Matrix&, const Vector&, const Vector&);
template Result<double> maximize(const std::vector<std::vector<double>>&,
                                 const std::vector<double>&, const std::vector<double>&);

namespace {

// Standard form of {E y = e, L y <= l}: y = p - q, plus one slack per
// inequality row. Columns are (p, q, s).
template <class T>
std::optional<std::vector<T>> find_point_impl(const std::vector<std::vector<T>>& eq,
                                              const std::vector<T>& eq_rhs,
                                              const std::vector<std::vector<T>>& le,
                                              const std::vector<T>& le_rhs) {
  const std::size_t n = !eq.empty() ? eq.front().size() : (!le.empty() ? le.front().size() : 0);
  const std::size_t slacks = le.size();
  std::vector<std::vector<T>> a;
  std::vector<T> b;
  a.reserve(eq.size() + le.size());
  for (std::size_t i = 0; i < eq.size(); ++i) {
    std::vector<T> row(2 * n + slacks, T(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = eq[i][j];
      row[n + j] = -eq[i][j];
    }
    a.push_back(std::move(row));
    b.push_back(eq_rhs[i]);
  }
  for (std::size_t i = 0; i < le.size(); ++i) {
    std::vector<T> row(2 * n + slacks, T(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = le[i][j];
      row[n + j] = -le[i][j];
    }
    row[2 * n + i] = T(1);
    a.push_back(std::move(row));
    b.push_back(le_rhs[i]);
  }
  const Result<T> res = find_feasible(a, b);
  if (res.status != Status::optimal) return std::nullopt;
  std::vector<T> y(n);
  for (std::size_t j = 0; j < n; ++j) y[j] = res.x[j] - res.x[n + j];
  return y;
}

}  // namespace

std::optional<Vector> find_point(const Matrix& eq, const Vector& eq_rhs, const Matrix& le,
                                 const Vector& le_rhs) {
  return find_point_impl(eq, eq_rhs, le, le_rhs);
}

std::optional<std::vector<double>> find_point_approx(const std::vector<std::vector<double>>& eq,
                                                     const std::vector<double>& eq_rhs,
                                                     const std::vector<std::vector<double>>& le,
                                                     const std::vector<double>& le_rhs) {
  return find_point_impl(eq, eq_rhs, le, le_rhs);
}

}  // namespace galelab::lp

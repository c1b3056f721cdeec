#include "galelab/geomcore.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "galelab/errors.hpp"
#include "galelab/linalg.hpp"
#include "galelab/lp.hpp"
#include "galelab/subsets.hpp"

namespace galelab {

VectorConfig::VectorConfig(int dim, std::vector<Vector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 1) throw DomainError("VectorConfig: dim must be positive");
  approx_.reserve(vectors_.size());
  for (const Vector& v : vectors_) {
    if (static_cast<int>(v.size()) != dim_) throw DomainError("VectorConfig: wrong vector length");
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; })) {
      throw DomainError("VectorConfig: zero vector");
    }
    std::vector<double> a(v.size());
    std::transform(v.begin(), v.end(), a.begin(), [](const Rational& q) { return q.get_d(); });
    approx_.push_back(std::move(a));
    Integer den = 1;
    for (const Rational& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> z(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) z[r] = v[r].get_num() * (den / v[r].get_den());
    scaled_.push_back(std::move(z));
    scale_.push_back(std::move(den));
  }
}

VectorConfig VectorConfig::from_doubles(int dim, const std::vector<std::vector<double>>& vectors) {
  std::vector<Vector> vs;
  vs.reserve(vectors.size());
  for (const auto& v : vectors) vs.push_back(rationalize(v));
  return VectorConfig(dim, std::move(vs));
}

VectorConfig VectorConfig::select(const IndexSet& idx) const {
  std::vector<Vector> vs;
  vs.reserve(idx.size());
  for (int i : idx) vs.push_back(vectors_.at(i));
  return VectorConfig(dim_, std::move(vs));
}

IndexSet all_indices(std::size_t n) {
  IndexSet idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

bool LPFeasibility::verify(const VectorConfig& cfg) const {
  return verify(cfg, all_indices(cfg.size()));
}

bool LPFeasibility::verify(const VectorConfig& cfg, const IndexSet& idx) const {
  if (feasible) {
    if (weights.size() != idx.size()) return false;
    Rational total = 0;
    Vector sum(cfg.dim(), Rational(0));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (sgn(weights[i]) < 0) return false;
      total += weights[i];
      const Vector& x = cfg[idx[i]];
      for (int r = 0; r < cfg.dim(); ++r) sum[r] += weights[i] * x[r];
    }
    return total == 1 && std::all_of(sum.begin(), sum.end(), [](const Rational& q) { return sgn(q) == 0; });
  }
  if (static_cast<int>(functional.size()) != cfg.dim()) return false;
  return std::all_of(idx.begin(), idx.end(), [&](int i) { return sgn(dot(functional, cfg[i])) > 0; });
}

namespace {

bool independent(const VectorConfig& cfg, const IndexSet& idx) {
  if (static_cast<int>(idx.size()) == cfg.dim()) {
    std::vector<std::vector<Integer>> m;
    m.reserve(idx.size());
    for (int i : idx) m.push_back(cfg.scaled(i));
    return sgn(integer_determinant(std::move(m))) != 0;
  }
  Matrix m;
  m.reserve(idx.size());
  for (int i : idx) m.push_back(cfg[i]);
  return linalg::rank(m) == static_cast<int>(idx.size());
}

// Column system [x_i; 1] lambda = e_{dim+1} over the vectors in idx.
Matrix hull_system(const VectorConfig& cfg, const IndexSet& idx) {
  const int dim = cfg.dim();
  Matrix a(dim + 1, Vector(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const Vector& x = cfg[idx[j]];
    for (int r = 0; r < dim; ++r) a[r][j] = x[r];
    a[dim][j] = 1;
  }
  return a;
}

Vector hull_rhs(int dim) {
  Vector b(dim + 1, Rational(0));
  b[dim] = 1;
  return b;
}

// Exact verdict derived from a floating-point guess. For a feasible guess,
// `mu` holds nonnegative kernel weights on `support` for the integer-scaled
// vectors; for an infeasible one, `functional` separates strictly.
struct Verdict {
  bool feasible = false;
  IndexSet support;           // positions within idx
  std::vector<Integer> mu;    // sum mu_j scaled(idx[support[j]]) = o
  Vector functional;
};

std::optional<Verdict> decide_from_guess(const VectorConfig& cfg, const IndexSet& idx) {
  const int dim = cfg.dim();
  const std::size_t n = idx.size();
  std::vector<std::vector<double>> a(dim + 1, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& x = cfg.approx(idx[j]);
    for (int r = 0; r < dim; ++r) a[r][j] = x[r];
    a[dim][j] = 1.0;
  }
  std::vector<double> b(dim + 1, 0.0);
  b[dim] = 1.0;
  const lp::Result<double> guess = lp::find_feasible(a, b);

  if (guess.status == lp::Status::infeasible) {
    const double t = guess.farkas[dim];
    if (!(t < 0.0)) return std::nullopt;
    Verdict v;
    v.functional.resize(dim);
    Integer den = 1;
    for (int r = 0; r < dim; ++r) {
      v.functional[r] = rationalize(guess.farkas[r] / -t);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.functional[r].get_den_mpz_t());
    }
    std::vector<Integer> u(dim);
    for (int r = 0; r < dim; ++r) u[r] = v.functional[r].get_num() * (den / v.functional[r].get_den());
    Integer s;
    for (int i : idx) {
      const auto& x = cfg.scaled(i);
      s = 0;
      for (int r = 0; r < dim; ++r) s += u[r] * x[r];
      if (sgn(s) <= 0) return std::nullopt;
    }
    return v;
  }
  if (guess.status != lp::Status::optimal) return std::nullopt;

  // The guessed basis has dim+1 columns; their integer kernel is spanned by
  // the signed maximal minors (Cramer). o is in the hull iff those minors
  // share a sign.
  const IndexSet& support = guess.basis;
  if (static_cast<int>(support.size()) != dim + 1) return std::nullopt;
  Verdict v;
  v.feasible = true;
  v.support = support;
  v.mu.resize(support.size());
  int sign = 0;
  for (std::size_t skip = 0; skip < support.size(); ++skip) {
    std::vector<std::vector<Integer>> minor;
    minor.reserve(dim);
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (j != skip) minor.push_back(cfg.scaled(idx[support[j]]));
    }
    Integer det = integer_determinant(std::move(minor));
    if (skip % 2 == 1) det = -det;
    const int sd = sgn(det);
    if (sd != 0) {
      if (sign != 0 && sd != sign) return std::nullopt;
      sign = sd;
    }
    v.mu[skip] = std::move(det);
  }
  if (sign == 0) return std::nullopt;
  if (sign < 0) {
    for (Integer& z : v.mu) z = -z;
  }
  return v;
}

LPFeasibility certificate_from(const VectorConfig& cfg, const IndexSet& idx, const Verdict& v) {
  LPFeasibility out;
  out.feasible = v.feasible;
  if (!v.feasible) {
    out.functional = v.functional;
    return out;
  }
  // lambda_j = mu_j * scale_j / sum(mu * scale) turns the integer kernel into
  // convex weights for the original vectors.
  out.weights.assign(idx.size(), Rational(0));
  Integer total = 0;
  for (std::size_t j = 0; j < v.support.size(); ++j) total += v.mu[j] * cfg.scale(idx[v.support[j]]);
  for (std::size_t j = 0; j < v.support.size(); ++j) {
    Rational w(v.mu[j] * cfg.scale(idx[v.support[j]]), total);
    w.canonicalize();
    out.weights[v.support[j]] = std::move(w);
  }
  return out;
}

}  // namespace

bool is_general_position(const VectorConfig& cfg) {
  const int n = static_cast<int>(cfg.size());
  const int m = cfg.dim();
  if (n <= m) return independent(cfg, all_indices(n));
  if (static_cast<std::size_t>(n) <= kExhaustiveGeneralPositionLimit) {
    IndexSet c = all_indices(m);
    do {
      if (!independent(cfg, c)) return false;
    } while (next_combination(c, n));
    return true;
  }
  std::mt19937_64 gen(0x9a1e5eedULL);
  IndexSet pool = all_indices(n);
  for (int t = 0; t < kGeneralPositionAuditSubsets; ++t) {
    // Partial Fisher-Yates: the first m entries become a uniform m-subset.
    for (int i = 0; i < m; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(pool[i], pool[pick(gen)]);
    }
    IndexSet c(pool.begin(), pool.begin() + m);
    std::sort(c.begin(), c.end());
    if (!independent(cfg, c)) return false;
  }
  return true;
}

LPFeasibility contains_origin_exact(const VectorConfig& cfg, const IndexSet& idx) {
  if (idx.empty()) throw DomainError("contains_origin: empty configuration");
  const lp::Result<Rational> res = lp::find_feasible(hull_system(cfg, idx), hull_rhs(cfg.dim()));
  LPFeasibility out;
  if (res.status == lp::Status::optimal) {
    out.feasible = true;
    out.weights = res.x;
  } else {
    // z = (u, t) with <u, x_i> + t >= 0 and t < 0, so <u, x_i> >= -t > 0.
    out.feasible = false;
    const Rational t = res.farkas.back();
    out.functional.assign(res.farkas.begin(), res.farkas.end() - 1);
    for (Rational& q : out.functional) q /= -t;
  }
  if (!out.verify(cfg, idx)) throw std::logic_error("contains_origin: certificate failed verification");
  return out;
}

LPFeasibility contains_origin(const VectorConfig& cfg, const IndexSet& idx) {
  if (idx.empty()) throw DomainError("contains_origin: empty configuration");
  if (const auto v = decide_from_guess(cfg, idx)) {
    LPFeasibility out = certificate_from(cfg, idx, *v);
    if (!out.verify(cfg, idx)) throw std::logic_error("contains_origin: certificate failed verification");
    return out;
  }
  return contains_origin_exact(cfg, idx);
}

bool origin_in_hull(const VectorConfig& cfg, const IndexSet& idx) {
  if (idx.empty()) throw DomainError("origin_in_hull: empty configuration");
  if (const auto v = decide_from_guess(cfg, idx)) return v->feasible;
  return contains_origin_exact(cfg, idx).feasible;
}

std::optional<IndexSet> origin_hull_support(const VectorConfig& cfg, const IndexSet& idx) {
  if (idx.empty()) throw DomainError("origin_hull_support: empty configuration");
  IndexSet support;
  if (const auto v = decide_from_guess(cfg, idx)) {
    if (!v->feasible) return std::nullopt;
    for (std::size_t j = 0; j < v->support.size(); ++j) {
      if (sgn(v->mu[j]) > 0) support.push_back(idx[v->support[j]]);
    }
  } else {
    const LPFeasibility exact = contains_origin_exact(cfg, idx);
    if (!exact.feasible) return std::nullopt;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (sgn(exact.weights[j]) > 0) support.push_back(idx[j]);
    }
  }
  std::sort(support.begin(), support.end());
  return support;
}

bool origin_in_hull(const VectorConfig& cfg) { return origin_in_hull(cfg, all_indices(cfg.size())); }

Integer integer_determinant(std::vector<std::vector<Integer>> a) {
  // Bareiss: every intermediate quotient is exact.
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (int c = 0; c < n - 1; ++c) {
    if (sgn(a[c][c]) == 0) {
      int p = c + 1;
      while (p < n && sgn(a[p][c]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[c]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[c][c] - a[i][c] * a[c][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[c][c];
  }
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

LPFeasibility contains_origin(const VectorConfig& cfg) { return contains_origin(cfg, all_indices(cfg.size())); }

bool contains_origin_interior(const VectorConfig& cfg) {
  if (!is_general_position(cfg)) {
    throw DegenerateInput("contains_origin_interior: configuration is not in general position");
  }
  return origin_in_hull(cfg);
}

}  // namespace galelab

#pragma once

// Exact combinatorics of random Gale diagrams: binomials, Wendel
// probabilities, expected face numbers and the union-bound estimate for
// full k-neighborliness. Everything here is exact except the explicitly
// named log-domain approximation.

#include "galelab/types.hpp"

namespace galelab {

/// Arbitrary-precision probability in [0, 1], kept in lowest terms.
class ExactProb {
 public:
  ExactProb() = default;
  /// Throws DomainError when `value` lies outside [0, 1].
  explicit ExactProb(Rational value);

  const Rational& value() const { return value_; }
  double to_double() const { return galelab::to_double(value_); }

  friend bool operator==(const ExactProb& a, const ExactProb& b) { return a.value_ == b.value_; }

 private:
  Rational value_ = 0;
};

/// Problem size (d, N, k): polytope dimension, number of points, face dimension.
struct Dims {
  int d = 1;
  int N = 3;
  int k = 0;

  /// Codimension m = N - d - 1, the dimension the Gale diagram lives in.
  int codim() const { return N - d - 1; }

  /// Throws DomainError unless 1 <= d, d + 2 <= N and 0 <= k <= d - 1.
  void validate() const;
  bool valid() const noexcept;

  Dims with_k(int new_k) const { return Dims{d, N, new_k}; }

  friend bool operator==(const Dims&, const Dims&) = default;
};

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

/// P_{r,M} = 2^{-(M-1)} * sum_{i<r} C(M-1, i): probability that the origin is
/// not in the convex hull of M symmetric random vectors in general position in R^r.
ExactProb wendel(int r, int M);

/// P(o in conv{Y_1..Y_M}) = P_{M-r,M}, for 1 <= r < M.
ExactProb origin_in_hull_prob(int r, int M);

/// E f_k(G_{d,N}) = C(N, k+1) * P_{d-k, N-k-1} / P_{d+1, N}.
Rational expected_fk(const Dims& dims);

/// E f_k / C(N, k+1).
ExactProb expected_fk_ratio(const Dims& dims);

/// max(0, 1 - C(N,k+1) * (1 - E f_k / C(N,k+1))): the union bound on
/// P(f_k = C(N, k+1)).
ExactProb neighborly_prob_lower_bound(const Dims& dims);

/// log P_{r,M} evaluated in floating point with log-gamma terms.
double log_wendel(long r, long M);

/// Floating approximation of expected_fk_ratio for very large d, where the
/// exact path becomes slow. Accurate to roughly 1e-12 relative.
double expected_fk_ratio_approx(long d, long N, long k);

}  // namespace galelab

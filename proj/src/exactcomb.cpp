#include "galelab/exactcomb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "galelab/errors.hpp"

namespace galelab {

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) {
    throw DomainError("probability out of [0,1]: " + value_.get_str());
  }
}

bool Dims::valid() const noexcept { return d >= 1 && N >= d + 2 && k >= 0 && k <= d - 1; }

void Dims::validate() const {
  const std::string where = "(d=" + std::to_string(d) + ", N=" + std::to_string(N) +
                            ", k=" + std::to_string(k) + ")";
  if (d < 1) throw DomainError("d >= 1 violated " + where);
  if (N < d + 2) throw DomainError("N >= d+2 violated " + where);
  if (k < 0 || k > d - 1) throw DomainError("0 <= k <= d-1 violated " + where);
}

Integer binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

void check_wendel_domain(int r, int M) {
  if (M < 1) throw DomainError("wendel: M >= 1 violated (M=" + std::to_string(M) + ")");
  if (r < 1) throw DomainError("wendel: r >= 1 violated (r=" + std::to_string(r) + ")");
  if (r > M) {
    throw DomainError("wendel: r <= M violated (r=" + std::to_string(r) +
                      ", M=" + std::to_string(M) + ")");
  }
}

// Partial row sum of Pascal's triangle, sum_{i<r} C(n, i), built incrementally.
Integer partial_row_sum(long n, long r) {
  Integer sum = 0;
  Integer term = 1;
  for (long i = 0; i < r && i <= n; ++i) {
    sum += term;
    term = term * (n - i) / (i + 1);
  }
  return sum;
}

Rational wendel_value(int r, int M) {
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(M - 1));
  Rational q(partial_row_sum(M - 1, r), den);
  q.canonicalize();
  return q;
}

}  // namespace

ExactProb wendel(int r, int M) {
  check_wendel_domain(r, M);
  return ExactProb(wendel_value(r, M));
}

ExactProb origin_in_hull_prob(int r, int M) {
  check_wendel_domain(r, M);
  if (r == M) {
    throw DomainError("origin_in_hull_prob: r < M violated (r=" + std::to_string(r) + ")");
  }
  return ExactProb(wendel_value(M - r, M));
}

ExactProb expected_fk_ratio(const Dims& dims) {
  dims.validate();
  const auto& [d, N, k] = dims;
  Rational q = wendel_value(d - k, N - k - 1) / wendel_value(d + 1, N);
  return ExactProb(std::move(q));
}

Rational expected_fk(const Dims& dims) {
  Rational q = expected_fk_ratio(dims).value() * Rational(binomial(dims.N, dims.k + 1));
  q.canonicalize();
  return q;
}

ExactProb neighborly_prob_lower_bound(const Dims& dims) {
  const Rational p_miss = 1 - expected_fk_ratio(dims).value();
  Rational bound = 1 - Rational(binomial(dims.N, dims.k + 1)) * p_miss;
  if (bound < 0) bound = 0;
  return ExactProb(std::move(bound));
}

double log_wendel(long r, long M) {
  if (M < 1 || r < 1 || r > M) throw DomainError("log_wendel: need 1 <= r <= M");
  const long n = M - 1;
  const auto log_choose = [n](long i) {
    return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
  };
  // Terms increase up to i = n/2, so the largest term of the partial sum is
  // at min(r-1, n/2).
  const long peak = std::min(r - 1, n / 2);
  const double top = log_choose(peak);
  double acc = 0.0;
  for (long i = 0; i < r; ++i) acc += std::exp(log_choose(i) - top);
  return top + std::log(acc) - static_cast<double>(n) * std::log(2.0);
}

double expected_fk_ratio_approx(long d, long N, long k) {
  if (d < 1 || N < d + 2 || k < 0 || k > d - 1) {
    throw DomainError("expected_fk_ratio_approx: invalid (d, N, k)");
  }
  return std::exp(log_wendel(d - k, N - k - 1) - log_wendel(d + 1, N));
}

}  // namespace galelab

#include "galelab/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "galelab/errors.hpp"
#include "galelab/linalg.hpp"
#include "galelab/lp.hpp"
#include "galelab/rng.hpp"
#include "galelab/subsets.hpp"

namespace galelab {

Distribution parse_distribution(const std::string& name) {
  if (name == "gaussian" || name == "gaussian-iid") return Distribution::gaussian_iid;
  if (name == "sphere" || name == "uniform-sphere") return Distribution::uniform_sphere;
  throw DomainError("unknown distribution '" + name + "' (expected gaussian-iid|uniform-sphere)");
}

std::string to_string(Distribution dist) {
  return dist == Distribution::gaussian_iid ? "gaussian-iid" : "uniform-sphere";
}

bool MCEstimate::agrees_with(double exact, double sigmas) const {
  return std::abs(mean - exact) <= sigmas * std_error;
}

MCEstimate summarize(std::span<const std::int64_t> outcomes, std::uint64_t seed, std::uint64_t rejected) {
  MCEstimate est;
  est.trials = outcomes.size();
  est.seed = seed;
  est.rejected = rejected;
  if (outcomes.empty()) throw DomainError("summarize: no trials");
  Integer sum = 0;
  Integer sum_sq = 0;
  for (std::int64_t v : outcomes) {
    const Integer z(static_cast<long>(v));
    sum += z;
    sum_sq += z * z;
  }
  const Integer n(static_cast<unsigned long>(outcomes.size()));
  est.mean = to_double(Rational(sum, n));
  if (outcomes.size() == 1) {
    est.std_error = 0.0;
    est.std_error_defined = false;
  } else {
    // Unbiased sample variance, exact up to the final conversion.
    Rational var(n * sum_sq - sum * sum, n * (n - 1) * n);
    var.canonicalize();
    est.std_error = std::sqrt(to_double(var));
  }
  est.ci_low = est.mean - 1.96 * est.std_error;
  est.ci_high = est.mean + 1.96 * est.std_error;
  return est;
}

namespace {

// Cone samples draw from a disjoint half of the stream-id space so the two
// models never share random numbers under one seed.
constexpr std::uint64_t kConeStreamBit = std::uint64_t{1} << 63;

struct TrialOutcome {
  std::int64_t value = 0;
  std::uint64_t rejections = 0;
};

unsigned resolve_workers(unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  return workers;
}

// Runs fn(t) for t in [0, trials). Results land at their trial index; the
// lowest-index failure is rethrown so errors are scheduling-independent too.
template <class Fn>
std::vector<TrialOutcome> run_trials(std::uint64_t trials, unsigned workers, Fn fn) {
  if (trials == 0) throw DomainError("trials must be positive");
  std::vector<TrialOutcome> results(trials);
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mutex;
  std::uint64_t err_index = trials;
  std::exception_ptr err;

  auto work = [&] {
    for (;;) {
      const std::uint64_t t = next.fetch_add(1);
      if (t >= trials) return;
      {
        std::lock_guard lock(err_mutex);
        if (err && t > err_index) return;
      }
      try {
        results[t] = fn(t);
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (t < err_index) {
          err_index = t;
          err = std::current_exception();
        }
      }
    }
  };

  workers = static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), trials));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (err) std::rethrow_exception(err);
  return results;
}

MCEstimate fold(const std::vector<TrialOutcome>& results, std::uint64_t seed) {
  std::vector<std::int64_t> values(results.size());
  std::uint64_t rejected = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    values[i] = results[i].value;
    rejected += results[i].rejections;
  }
  return summarize(values, seed, rejected);
}

std::vector<double> draw_vector(RandomStream& rng, int dim, Distribution dist) {
  std::vector<double> v(dim);
  for (;;) {
    double norm_sq = 0.0;
    for (double& x : v) {
      x = rng.gaussian();
      norm_sq += x * x;
    }
    if (norm_sq == 0.0) continue;
    if (dist == Distribution::uniform_sphere) {
      const double norm = std::sqrt(norm_sq);
      for (double& x : v) x /= norm;
    }
    return v;
  }
}

std::vector<Vector> draw_config(RandomStream& rng, int n, int dim, Distribution dist) {
  std::vector<Vector> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(rationalize(draw_vector(rng, dim, dist)));
  return out;
}

void validate_sampler(const SamplerConfig& cfg) {
  cfg.dims.validate();
  if (cfg.max_rejections == 0) throw DomainError("max_rejections must be positive");
}

[[noreturn]] void budget_exhausted(const std::string& what, const SamplerConfig& cfg) {
  const ExactProb accept = wendel(cfg.dims.d + 1, cfg.dims.N);
  throw RejectionBudgetExhausted(what + ": rejection budget of " + std::to_string(cfg.max_rejections) +
                                 " exhausted; expected acceptance P_{d+1,N} = " +
                                 accept.value().get_str() + " ~ " + std::to_string(accept.to_double()));
}

}  // namespace

Sampled<GaleDiagram> sample_gale_diagram(const SamplerConfig& cfg, std::uint64_t stream) {
  validate_sampler(cfg);
  const int m = cfg.dims.codim();
  RandomStream rng(cfg.seed, stream);
  for (std::uint64_t rejections = 0; rejections <= cfg.max_rejections; ++rejections) {
    VectorConfig vectors(m, draw_config(rng, cfg.dims.N, m, cfg.distribution));
    if (!origin_in_hull(vectors)) continue;
    if (!is_general_position(vectors)) continue;
    return {GaleDiagram(cfg.dims.d, std::move(vectors), GaleDiagram::Prevalidated{}), rejections};
  }
  budget_exhausted("sample_gale_diagram", cfg);
}

Sampled<ConeSample> sample_cover_efron(const SamplerConfig& cfg, std::uint64_t stream) {
  validate_sampler(cfg);
  const int dim = cfg.dims.d + 1;
  RandomStream rng(cfg.seed, stream | kConeStreamBit);
  for (std::uint64_t rejections = 0; rejections <= cfg.max_rejections; ++rejections) {
    VectorConfig vectors(dim, draw_config(rng, cfg.dims.N, dim, cfg.distribution));
    if (origin_in_hull(vectors)) continue;
    if (!is_general_position(vectors)) continue;
    return {ConeSample{cfg.dims, std::move(vectors)}, rejections};
  }
  budget_exhausted("sample_cover_efron", cfg);
}

bool is_cone_face_lp(const VectorConfig& z, const IndexSet& subset) {
  const int n = static_cast<int>(z.size());
  Matrix eq, le;
  Vector eq_rhs, le_rhs;
  std::size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < subset.size() && subset[p] == i) {
      eq.push_back(z[i]);
      eq_rhs.emplace_back(0);
      ++p;
    } else {
      le.push_back(z[i]);
      le_rhs.emplace_back(-1);
    }
  }
  return lp::find_point(eq, eq_rhs, le, le_rhs).has_value();
}

bool is_cone_face(const VectorConfig& z, const IndexSet& subset) {
  // With u restricted to span(Z_J)^perp = null(Z_J), <u, Z_i> = <c, pi(Z_i)>
  // where pi(z) = (<n_b, z>)_b over a null-space basis n_b. The system is then
  // feasible iff the projected off-J vectors lie in an open halfspace, i.e.
  // iff o is not in their convex hull.
  const int n = static_cast<int>(z.size());
  Matrix rows;
  rows.reserve(subset.size());
  for (int i : subset) rows.push_back(z[i]);
  const Matrix normals = linalg::null_space(rows);
  const IndexSet others = complement(subset, n);
  if (others.empty()) return true;
  if (normals.empty()) return false;
  std::vector<Vector> projected;
  projected.reserve(others.size());
  for (int i : others) {
    Vector v(normals.size());
    bool zero = true;
    for (std::size_t b = 0; b < normals.size(); ++b) {
      v[b] = dot(normals[b], z[i]);
      if (sgn(v[b]) != 0) zero = false;
    }
    if (zero) return false;  // Z_i in span(Z_J) forces <u, Z_i> = 0
    projected.push_back(std::move(v));
  }
  return !origin_in_hull(VectorConfig(static_cast<int>(normals.size()), std::move(projected)));
}

Integer count_cone_faces(const ConeSample& cone, int j, std::uint64_t cap) {
  const int dim = cone.vectors.dim();
  const int n = static_cast<int>(cone.vectors.size());
  if (j < 1 || j > dim) throw DomainError("count_cone_faces: need 1 <= j <= d+1 = " + std::to_string(dim));
  check_enumeration_cap(n, j, cap);
  unsigned long count = 0;
  IndexSet subset = first_combination(j);
  do {
    if (is_cone_face(cone.vectors, subset)) ++count;
  } while (next_combination(subset, n));
  return Integer(count);
}

MCEstimate estimate_fk(const SamplerConfig& cfg, int k, std::uint64_t trials, const RunOptions& opts) {
  validate_sampler(cfg);
  cfg.dims.with_k(k).validate();
  check_enumeration_cap(cfg.dims.N, k + 1, opts.cap);
  const auto results = run_trials(trials, opts.workers, [&](std::uint64_t t) {
    auto s = sample_gale_diagram(cfg, t);
    const FaceCount fc = count_faces(s.value, k, opts.cap);
    return TrialOutcome{static_cast<std::int64_t>(fc.count.get_si()), s.rejections};
  });
  return fold(results, cfg.seed);
}

MCEstimate estimate_neighborly_prob(const SamplerConfig& cfg, int k, std::uint64_t trials,
                                    const RunOptions& opts) {
  validate_sampler(cfg);
  cfg.dims.with_k(k).validate();
  check_enumeration_cap(cfg.dims.N, k + 1, opts.cap);
  const auto results = run_trials(trials, opts.workers, [&](std::uint64_t t) {
    auto s = sample_gale_diagram(cfg, t);
    const FaceCount fc = count_faces(s.value, k, opts.cap);
    return TrialOutcome{fc.is_complete_neighborly ? 1 : 0, s.rejections};
  });
  return fold(results, cfg.seed);
}

MCEstimate estimate_cone_faces(const SamplerConfig& cfg, int j, std::uint64_t trials,
                               const RunOptions& opts) {
  validate_sampler(cfg);
  if (j < 1 || j > cfg.dims.d + 1) throw DomainError("estimate_cone_faces: need 1 <= j <= d+1");
  check_enumeration_cap(cfg.dims.N, j, opts.cap);
  const auto results = run_trials(trials, opts.workers, [&](std::uint64_t t) {
    auto s = sample_cover_efron(cfg, t);
    const Integer c = count_cone_faces(s.value, j, opts.cap);
    return TrialOutcome{static_cast<std::int64_t>(c.get_si()), s.rejections};
  });
  return fold(results, cfg.seed);
}

MCEstimate estimate_containment(int r, int M, Distribution dist, std::uint64_t trials,
                                std::uint64_t seed, const RunOptions& opts) {
  if (r < 1 || M < 1) throw DomainError("estimate_containment: need r >= 1 and M >= 1");
  const auto results = run_trials(trials, opts.workers, [&](std::uint64_t t) {
    RandomStream rng(seed, t);
    const VectorConfig vectors(r, draw_config(rng, M, r, dist));
    return TrialOutcome{origin_in_hull(vectors) ? 1 : 0, 0};
  });
  return fold(results, seed);
}

MCEstimate estimate_acceptance(const SamplerConfig& cfg, std::uint64_t trials, const RunOptions& opts) {
  validate_sampler(cfg);
  return estimate_containment(cfg.dims.codim(), cfg.dims.N, cfg.distribution, trials, cfg.seed, opts);
}

DualityReport verify_duality_identity(const Dims& dims, std::uint64_t trials, std::uint64_t seed,
                                      const RunOptions& opts, Distribution dist) {
  dims.validate();
  DualityReport rep;
  rep.dims = dims;
  rep.exact = expected_fk(dims);
  const SamplerConfig cfg{dims, dist, seed};
  rep.gale = estimate_fk(cfg, dims.k, trials, opts);
  rep.cone = estimate_cone_faces(cfg, dims.k + 1, trials, opts);
  const double exact = to_double(rep.exact);
  rep.gale_pass = rep.gale.agrees_with(exact);
  rep.cone_pass = rep.cone.agrees_with(exact);
  return rep;
}

Dims phase_dims(double delta, double rho, int d) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("phase_dims: need 0 < delta < 1");
  if (!(rho >= 0.0 && rho <= 1.0)) throw DomainError("phase_dims: need 0 <= rho <= 1");
  if (d < 1) throw DomainError("phase_dims: need d >= 1");
  const long n = std::max<long>(std::lround(d / delta), d + 2);
  const long k = std::clamp<long>(std::lround(rho * d), 0, d - 1);
  return Dims{d, static_cast<int>(n), static_cast<int>(k)};
}

std::vector<PhaseRow> phase_experiment(double delta, double rho, std::span<const int> d_list,
                                       std::uint64_t trials, std::uint64_t seed,
                                       const RunOptions& opts) {
  std::vector<PhaseRow> rows;
  rows.reserve(d_list.size());
  for (int d : d_list) {
    PhaseRow row;
    row.dims = phase_dims(delta, rho, d);
    row.ratio = expected_fk_ratio(row.dims).value();
    if (trials > 0) {
      try {
        const SamplerConfig cfg{row.dims, Distribution::gaussian_iid, seed};
        row.neighborly = estimate_neighborly_prob(cfg, row.dims.k, trials, opts);
      } catch (const EnumerationCapExceeded& e) {
        row.note = e.what();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace galelab

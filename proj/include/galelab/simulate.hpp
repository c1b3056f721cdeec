#pragma once

// Seeded Monte Carlo over random Gale diagrams and Cover-Efron cones.
//
// Trial t of a run draws exclusively from the Philox stream (seed, t), and
// per-trial integer outcomes are folded in trial order, so every estimate is
// bit-identical for fixed (seed, trials) at any worker count.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galelab/exactcomb.hpp"
#include "galelab/galecore.hpp"
#include "galelab/geomcore.hpp"

namespace galelab {

/// Both laws are even and give zero mass to hyperplanes through o.
enum class Distribution { gaussian_iid, uniform_sphere };

Distribution parse_distribution(const std::string& name);
std::string to_string(Distribution dist);

struct SamplerConfig {
  Dims dims;
  Distribution distribution = Distribution::gaussian_iid;
  std::uint64_t seed = 0;
  std::uint64_t max_rejections = 1'000'000;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  double ci_low = 0.0;     // mean -/+ 1.96 std_error
  double ci_high = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t rejected = 0;
  bool std_error_defined = true;  // false for a single trial

  /// |mean - exact| <= sigmas * std_error.
  bool agrees_with(double exact, double sigmas = 3.0) const;
};

/// Builds an estimate from integer outcomes using exact integer moment sums.
MCEstimate summarize(std::span<const std::int64_t> outcomes, std::uint64_t seed,
                     std::uint64_t rejected);

struct RunOptions {
  unsigned workers = 1;  // 0 = one per hardware thread
  std::uint64_t cap = kDefaultEnumerationCap;
};

template <class T>
struct Sampled {
  T value;
  std::uint64_t rejections = 0;
};

/// N i.i.d. draws from `distribution` in dimension m = N - d - 1, redrawn
/// wholesale until the origin lies in their convex hull (and general
/// position holds). Deterministic in (cfg.seed, stream).
Sampled<GaleDiagram> sample_gale_diagram(const SamplerConfig& cfg, std::uint64_t stream = 0);

struct ConeSample {
  Dims dims;
  VectorConfig vectors;  // N vectors in dimension d + 1, o not in their hull
};

/// N i.i.d. draws in dimension d + 1 conditioned on pos{Z_i} != R^{d+1}.
Sampled<ConeSample> sample_cover_efron(const SamplerConfig& cfg, std::uint64_t stream = 0);

/// Whether pos{Z_i : i in J} is a face of pos{Z}: some u has <u, Z_i> = 0 on J
/// and <u, Z_i> <= -1 off J. Decided by projecting along span(Z_J) and
/// testing the projections for an enclosed origin.
bool is_cone_face(const VectorConfig& z, const IndexSet& subset);

/// The same system solved directly by the exact simplex, with u split into
/// free parts. Slower; kept as an independent check of is_cone_face.
bool is_cone_face_lp(const VectorConfig& z, const IndexSet& subset);

/// Number of j-subsets J for which pos{Z_i : i in J} is a j-face.
/// Requires 1 <= j <= d + 1.
Integer count_cone_faces(const ConeSample& cone, int j, std::uint64_t cap = kDefaultEnumerationCap);

/// Mean of f_k over conditioned Gale diagrams; estimates E f_k(G_{d,N}).
MCEstimate estimate_fk(const SamplerConfig& cfg, int k, std::uint64_t trials,
                       const RunOptions& opts = {});

/// Frequency of f_k = C(N, k+1).
MCEstimate estimate_neighborly_prob(const SamplerConfig& cfg, int k, std::uint64_t trials,
                                    const RunOptions& opts = {});

/// Mean of count_cone_faces(., j) over Cover-Efron cones.
MCEstimate estimate_cone_faces(const SamplerConfig& cfg, int j, std::uint64_t trials,
                               const RunOptions& opts = {});

/// Unconditioned frequency of o in conv{Y_1..Y_M} for M draws in R^r.
MCEstimate estimate_containment(int r, int M, Distribution dist, std::uint64_t trials,
                                std::uint64_t seed, const RunOptions& opts = {});

/// Fraction of accepted draws among all attempts of the Gale sampler.
MCEstimate estimate_acceptance(const SamplerConfig& cfg, std::uint64_t trials,
                               const RunOptions& opts = {});

struct DualityReport {
  Dims dims;
  Rational exact;       // E f_k(G_{d,N}) = E f_{k+1}(C_{d+1,N})
  MCEstimate gale;      // f_k of Gale polytopes
  MCEstimate cone;      // f_{k+1} of Cover-Efron cones
  bool gale_pass = false;
  bool cone_pass = false;
  bool pass() const { return gale_pass && cone_pass; }
};

DualityReport verify_duality_identity(const Dims& dims, std::uint64_t trials, std::uint64_t seed,
                                      const RunOptions& opts = {},
                                      Distribution dist = Distribution::gaussian_iid);

/// (d, N, k) for a finite-size point on the ray d/N = delta, k/d = rho:
/// N = max(round(d/delta), d+2), k = round(rho d) clipped to [0, d-1].
Dims phase_dims(double delta, double rho, int d);

struct PhaseRow {
  Dims dims;
  Rational ratio;                         // exact E f_k / C(N, k+1)
  std::optional<MCEstimate> neighborly;   // P(f_k = C(N, k+1)) when enumerable
  std::string note;
};

/// One row per d: exact expected-face ratio, plus a Monte Carlo estimate of
/// the neighborliness probability when trials > 0 and the enumeration fits
/// the cap.
std::vector<PhaseRow> phase_experiment(double delta, double rho, std::span<const int> d_list,
                                       std::uint64_t trials, std::uint64_t seed,
                                       const RunOptions& opts = {});

}  // namespace galelab

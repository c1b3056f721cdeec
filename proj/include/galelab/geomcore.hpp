#pragma once

// Exact predicates on configurations of rational vectors: linear general
// position and origin-in-convex-hull with verifiable certificates.

#include <cstddef>
#include <optional>
#include <vector>

#include "galelab/types.hpp"

namespace galelab {

/// Ordered list of nonzero vectors in Q^dim. Immutable once built; a double
/// shadow copy is kept for the floating-point pre-pass.
class VectorConfig {
 public:
  VectorConfig() = default;
  /// Throws DomainError on a size mismatch or a zero vector.
  VectorConfig(int dim, std::vector<Vector> vectors);
  static VectorConfig from_doubles(int dim, const std::vector<std::vector<double>>& vectors);

  int dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<double>& approx(std::size_t i) const { return approx_[i]; }
  /// Integer vector scale(i) * x_i, with scale(i) the positive lcm of the
  /// coordinate denominators. Positive rescaling leaves every conic and
  /// convex-hull predicate unchanged.
  const std::vector<Integer>& scaled(std::size_t i) const { return scaled_[i]; }
  const Integer& scale(std::size_t i) const { return scale_[i]; }

  VectorConfig select(const IndexSet& idx) const;

  friend bool operator==(const VectorConfig& a, const VectorConfig& b) {
    return a.dim_ == b.dim_ && a.vectors_ == b.vectors_;
  }

 private:
  int dim_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::vector<double>> approx_;
  std::vector<std::vector<Integer>> scaled_;
  std::vector<Integer> scale_;
};

/// Outcome of the origin-in-hull test with an exact witness.
struct LPFeasibility {
  bool feasible = false;
  Vector weights;     // feasible: weights >= 0, sum 1, sum w_i x_i = o
  Vector functional;  // infeasible: <u, x_i> > 0 for every vector

  /// Exact re-verification of the certificate this result carries.
  bool verify(const VectorConfig& cfg) const;
  /// Same, against the subconfiguration `idx` of cfg.
  bool verify(const VectorConfig& cfg, const IndexSet& idx) const;
};

/// Audit budget for configurations too large to check exhaustively.
inline constexpr std::size_t kExhaustiveGeneralPositionLimit = 16;
inline constexpr int kGeneralPositionAuditSubsets = 200;

/// True iff every dim-element subset is linearly independent (or, when
/// there are fewer vectors than dim, the whole set is). Exhaustive for up to
/// 16 vectors; above that a seeded audit of 200 random subsets, which is
/// evidence rather than proof.
bool is_general_position(const VectorConfig& cfg);

/// Decides o in conv(cfg) by exact rational LP and returns a verified
/// certificate. Requires a nonempty configuration.
LPFeasibility contains_origin(const VectorConfig& cfg);

/// contains_origin restricted to the vectors listed in `idx`; certificate
/// entries are indexed like `idx`.
LPFeasibility contains_origin(const VectorConfig& cfg, const IndexSet& idx);

/// Exact decision of o in conv{x_i : i in idx} without building a certificate.
/// The floating-point guess is confirmed by integer sign computations, with
/// the exact simplex as fallback.
bool origin_in_hull(const VectorConfig& cfg, const IndexSet& idx);
bool origin_in_hull(const VectorConfig& cfg);

/// When o is in conv{x_i : i in idx}, a subset of idx (entries of cfg,
/// ascending) whose hull already contains o; nullopt otherwise.
std::optional<IndexSet> origin_hull_support(const VectorConfig& cfg, const IndexSet& idx);

/// Same decision using only the exact simplex (no floating-point pre-pass).
LPFeasibility contains_origin_exact(const VectorConfig& cfg, const IndexSet& idx);

/// o in the interior of conv(cfg). Throws DegenerateInput unless cfg is in
/// general position, where interior and plain containment coincide.
bool contains_origin_interior(const VectorConfig& cfg);

IndexSet all_indices(std::size_t n);

/// Determinant of a square integer matrix by fraction-free elimination.
Integer integer_determinant(std::vector<std::vector<Integer>> a);

}  // namespace galelab

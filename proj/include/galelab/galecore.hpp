#pragma once

// Gale transforms in both directions and face counting through the Gale
// criterion: for a (k+1)-subset I of the points, conv{a_i : i in I} is a
// k-face of the polytope iff o lies in conv{abar_j : j not in I}.

#include <cstdint>

#include "galelab/exactcomb.hpp"
#include "galelab/geomcore.hpp"
#include "galelab/types.hpp"

namespace galelab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// N points in Q^d that affinely span Q^d.
class PointConfiguration {
 public:
  /// Throws DomainError on shape errors and RankDeficient if the points do
  /// not affinely span dimension d.
  PointConfiguration(int d, std::vector<Vector> points);

  int d() const { return d_; }
  int N() const { return static_cast<int>(points_.size()); }
  const std::vector<Vector>& points() const { return points_; }
  const Vector& operator[](std::size_t i) const { return points_[i]; }

 private:
  int d_;
  std::vector<Vector> points_;
};

/// N vectors in Q^m, m = N - d - 1, in linear general position with the
/// origin in their convex hull.
class GaleDiagram {
 public:
  /// Validates both invariants; throws DomainError if the origin is outside
  /// the hull and DegenerateInput if general position fails.
  GaleDiagram(int d, VectorConfig vectors);

  struct Prevalidated {};
  /// For callers that have already established both invariants.
  GaleDiagram(int d, VectorConfig vectors, Prevalidated);

  int d() const { return d_; }
  int N() const { return static_cast<int>(vectors_.size()); }
  int codim() const { return vectors_.dim(); }
  Dims dims(int k = 0) const { return Dims{d_, N(), k}; }
  const VectorConfig& vectors() const { return vectors_; }

  friend bool operator==(const GaleDiagram&, const GaleDiagram&) = default;

 private:
  int d_;
  VectorConfig vectors_;
};

struct DependenceWeights {
  Vector lambda;  // strictly positive, sums to 1, sum lambda_i X_i = o
};

struct FaceCount {
  Dims dims;
  Integer count;
  bool is_complete_neighborly = false;  // count == C(N, k+1)
};

/// Columns of the lower block of a Gale matrix: one vector in Q^{N-d-1} per
/// point, built from the null space of the lifted point matrix. The vectors
/// sum to o and span Q^{N-d-1}. Throws DomainError when N < d + 2 and
/// DegenerateInput when some transform vector is zero (a point that takes
/// part in no affine dependence).
VectorConfig gale_transform(const PointConfiguration& pts);

/// Positive weights making the diagram sum to o, chosen by an LP that
/// maximises the smallest weight subject to sum lambda = 1.
DependenceWeights positive_dependence(const GaleDiagram& diagram);

/// A point configuration whose Gale transform is the positively rescaled
/// diagram (up to the choice of basis). Deterministic.
PointConfiguration realize(const GaleDiagram& diagram);

/// Gale criterion for the index set I (0-based, sorted, |I| <= d).
bool is_face(const GaleDiagram& diagram, const IndexSet& subset);

/// f_k by enumerating all (k+1)-subsets in lexicographic order. Throws
/// EnumerationCapExceeded when C(N, k+1) > cap.
FaceCount count_faces(const GaleDiagram& diagram, int k,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// j-neighborly iff f_{j-1} = C(N, j), for 1 <= j <= d.
bool is_k_neighborly(const GaleDiagram& diagram, int j,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// Throws EnumerationCapExceeded when C(n, r) exceeds cap.
void check_enumeration_cap(int n, int r, std::uint64_t cap);

}  // namespace galelab

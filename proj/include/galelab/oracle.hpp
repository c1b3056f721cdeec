#pragma once

// Brute-force reference computations. These are deliberately naive and
// exist to cross-check the closed forms and the Gale criterion at small
// sizes.

#include <cstdint>
#include <vector>

#include "galelab/exactcomb.hpp"
#include "galelab/galecore.hpp"
#include "galelab/geomcore.hpp"
#include "galelab/simulate.hpp"

namespace galelab::oracle {

inline constexpr int kMaxSignOracleVectors = 20;
inline constexpr std::uint64_t kDefaultOracleCap = 10'000;

/// Fraction of the 2^M sign patterns eps for which o is not in
/// conv{eps_i x_i}. For M vectors in general position in R^r this equals
/// P_{r,M} exactly.
ExactProb wendel_sign_oracle(int r, int M, const VectorConfig& cfg);

struct FaceSetReport {
  int k = 0;
  std::vector<IndexSet> faces;  // sorted (k+1)-subsets, lexicographic order
};

/// k-faces of conv(pts) by testing every (k+1)-subset S for a supporting
/// hyperplane: (u, c) with <u, a_i> = c on S and <u, a_j> <= c - 1 off S.
/// Requires affine general position.
FaceSetReport hull_faces(const PointConfiguration& pts, int k, std::uint64_t cap = kDefaultOracleCap);

/// Exact test that every (d+1)-subset of the lifted points is independent.
bool is_affine_general_position(const PointConfiguration& pts);

/// Faces predicted by the Gale criterion, in the same layout as hull_faces.
FaceSetReport gale_faces(const GaleDiagram& diagram, int k, std::uint64_t cap = kDefaultOracleCap);

struct RoundTripMismatch {
  std::uint64_t trial = 0;
  int k = 0;
  IndexSet subset;
  bool gale_says_face = false;
  bool hull_says_face = false;
  std::vector<Vector> diagram;  // the sampled Gale diagram
  std::vector<Vector> points;   // its realization
};

struct RoundTripReport {
  int d = 0;
  int N = 0;
  std::uint64_t trials = 0;
  std::uint64_t passed = 0;  // trials with full agreement at every k
  std::uint64_t subsets_checked = 0;
  std::vector<RoundTripMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// For each trial: sample a Gale diagram (seeded, stream = trial), realize it,
/// and compare gale_faces with hull_faces on the realization for every k in
/// [0, d-1]. Throws EnumerationCapExceeded before sampling when any
/// C(N, k+1) exceeds cap.
RoundTripReport verify_gale_criterion(int d, int N, std::uint64_t trials, std::uint64_t seed,
                                      std::uint64_t cap = kDefaultOracleCap);

}  // namespace galelab::oracle

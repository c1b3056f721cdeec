#include "galelab/galecore.hpp"

#include <algorithm>
#include <string>

#include "galelab/errors.hpp"
#include "galelab/linalg.hpp"
#include "galelab/lp.hpp"
#include "galelab/subsets.hpp"

namespace galelab {

namespace {

// (d+1) x N matrix: coordinate rows followed by the all-ones row.
Matrix lifted(const std::vector<Vector>& points, int d) {
  Matrix m(d + 1, Vector(points.size()));
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (int r = 0; r < d; ++r) m[r][j] = points[j][r];
    m[d][j] = 1;
  }
  return m;
}

}  // namespace

PointConfiguration::PointConfiguration(int d, std::vector<Vector> points)
    : d_(d), points_(std::move(points)) {
  if (d_ < 1) throw DomainError("PointConfiguration: d must be positive");
  if (static_cast<int>(points_.size()) < d_ + 1) {
    throw RankDeficient("PointConfiguration: need at least d+1 points to span dimension d");
  }
  for (const Vector& p : points_) {
    if (static_cast<int>(p.size()) != d_) throw DomainError("PointConfiguration: wrong point length");
  }
  if (linalg::rank(lifted(points_, d_)) != d_ + 1) {
    throw RankDeficient("PointConfiguration: points do not affinely span dimension " +
                        std::to_string(d_));
  }
}

GaleDiagram::GaleDiagram(int d, VectorConfig vectors, Prevalidated) : d_(d), vectors_(std::move(vectors)) {
  if (d_ < 1) throw DomainError("GaleDiagram: d must be positive");
  if (vectors_.dim() != N() - d_ - 1) {
    throw DomainError("GaleDiagram: vectors must live in dimension N-d-1 = " +
                      std::to_string(N() - d_ - 1));
  }
}

GaleDiagram::GaleDiagram(int d, VectorConfig vectors) : GaleDiagram(d, std::move(vectors), Prevalidated{}) {
  if (!origin_in_hull(vectors_)) {
    throw DomainError("GaleDiagram: origin is not in the convex hull of the vectors");
  }
  if (!is_general_position(vectors_)) {
    throw DegenerateInput("GaleDiagram: vectors are not in linear general position");
  }
}

VectorConfig gale_transform(const PointConfiguration& pts) {
  const int d = pts.d();
  const int n = pts.N();
  if (n < d + 2) throw DomainError("gale_transform: need N >= d+2 for a nontrivial transform");
  const Matrix basis = linalg::null_space(lifted(pts.points(), d));  // (N-d-1) rows
  const int m = static_cast<int>(basis.size());
  std::vector<Vector> cols(n, Vector(m));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) cols[j][r] = basis[r][j];
  }
  for (int j = 0; j < n; ++j) {
    if (std::all_of(cols[j].begin(), cols[j].end(), [](const Rational& q) { return sgn(q) == 0; })) {
      throw DegenerateInput("gale_transform: point " + std::to_string(j) +
                            " takes part in no affine dependence");
    }
  }
  return VectorConfig(m, std::move(cols));
}

DependenceWeights positive_dependence(const GaleDiagram& diagram) {
  // lambda_i = t + mu_i with t, mu >= 0; maximise t.
  // Columns: t, mu_1..mu_N. Rows: the m coordinates of sum lambda_i X_i = o,
  // then sum lambda_i = 1.
  const VectorConfig& x = diagram.vectors();
  const int n = diagram.N();
  const int m = x.dim();
  Matrix a(m + 1, Vector(n + 1, Rational(0)));
  for (int r = 0; r < m; ++r) {
    Rational total = 0;
    for (int i = 0; i < n; ++i) {
      a[r][i + 1] = x[i][r];
      total += x[i][r];
    }
    a[r][0] = total;
  }
  a[m][0] = n;
  for (int i = 0; i < n; ++i) a[m][i + 1] = 1;
  Vector b(m + 1, Rational(0));
  b[m] = 1;
  Vector c(n + 1, Rational(0));
  c[0] = 1;

  const lp::Result<Rational> res = lp::maximize(a, b, c);
  if (res.status != lp::Status::optimal || sgn(res.objective) <= 0) {
    throw PreconditionViolated("positive_dependence: only a degenerate (non-strictly-positive) "
                               "dependence exists");
  }
  DependenceWeights w;
  w.lambda.resize(n);
  for (int i = 0; i < n; ++i) w.lambda[i] = res.x[0] + res.x[i + 1];
  return w;
}

PointConfiguration realize(const GaleDiagram& diagram) {
  const DependenceWeights w = positive_dependence(diagram);
  const VectorConfig& x = diagram.vectors();
  const int n = diagram.N();
  const int m = x.dim();
  // Stack the rows of the scaled diagram with the all-ones row; a null-space
  // basis of that system gives the d coordinate rows.
  Matrix stacked(m + 1, Vector(n));
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < m; ++r) stacked[r][j] = w.lambda[j] * x[j][r];
    stacked[m][j] = 1;
  }
  const Matrix coords = linalg::null_space(stacked);
  if (static_cast<int>(coords.size()) != diagram.d()) {
    throw PreconditionViolated("realize: diagram vectors do not span their space");
  }
  std::vector<Vector> points(n, Vector(diagram.d()));
  for (int r = 0; r < diagram.d(); ++r) {
    for (int j = 0; j < n; ++j) points[j][r] = coords[r][j];
  }
  return PointConfiguration(diagram.d(), std::move(points));
}

bool is_face(const GaleDiagram& diagram, const IndexSet& subset) {
  const int n = diagram.N();
  if (static_cast<int>(subset.size()) > diagram.d()) {
    throw DomainError("is_face: |I| must be at most d = " + std::to_string(diagram.d()));
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n || (i > 0 && subset[i] <= subset[i - 1])) {
      throw DomainError("is_face: index set must be sorted, distinct and within [0, N)");
    }
  }
  return origin_in_hull(diagram.vectors(), complement(subset, n));
}

void check_enumeration_cap(int n, int r, std::uint64_t cap) {
  const Integer total = binomial(n, r);
  if (total > Integer(static_cast<unsigned long>(cap))) {
    throw EnumerationCapExceeded("enumeration cap exceeded: C(" + std::to_string(n) + "," +
                                 std::to_string(r) + ") = " + total.get_str() + " > " +
                                 std::to_string(cap));
  }
}

FaceCount count_faces(const GaleDiagram& diagram, int k, std::uint64_t cap) {
  const Dims dims = diagram.dims(k);
  dims.validate();
  const int n = diagram.N();
  check_enumeration_cap(n, k + 1, cap);
  // Any support found to enclose o that misses the subset settles it as a
  // face without another LP. Supports are kept as bitmasks, most recent first.
  constexpr std::size_t kMaxWitnesses = 32;
  std::vector<std::uint64_t> witnesses;
  const bool use_witnesses = n <= 64;
  unsigned long count = 0;
  IndexSet subset = first_combination(k + 1);
  do {
    std::uint64_t mask = 0;
    if (use_witnesses) {
      for (int i : subset) mask |= std::uint64_t{1} << i;
      const auto hit = std::find_if(witnesses.begin(), witnesses.end(),
                                    [mask](std::uint64_t w) { return (w & mask) == 0; });
      if (hit != witnesses.end()) {
        std::rotate(witnesses.begin(), hit, hit + 1);
        ++count;
        continue;
      }
    }
    const auto support = origin_hull_support(diagram.vectors(), complement(subset, n));
    if (!support) continue;
    ++count;
    if (use_witnesses) {
      std::uint64_t w = 0;
      for (int i : *support) w |= std::uint64_t{1} << i;
      if (witnesses.size() == kMaxWitnesses) witnesses.pop_back();
      witnesses.insert(witnesses.begin(), w);
    }
  } while (next_combination(subset, n));
  FaceCount out{dims, Integer(count), false};
  out.is_complete_neighborly = out.count == binomial(n, k + 1);
  return out;
}

bool is_k_neighborly(const GaleDiagram& diagram, int j, std::uint64_t cap) {
  if (j < 1 || j > diagram.d()) {
    throw DomainError("is_k_neighborly: need 1 <= j <= d = " + std::to_string(diagram.d()));
  }
  return count_faces(diagram, j - 1, cap).is_complete_neighborly;
}

}  // namespace galelab

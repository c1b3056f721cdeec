#include "galelab/oracle.hpp"

#include <algorithm>
#include <string>

#include "galelab/errors.hpp"
#include "galelab/linalg.hpp"
#include "galelab/lp.hpp"
#include "galelab/subsets.hpp"

namespace galelab::oracle {

ExactProb wendel_sign_oracle(int r, int M, const VectorConfig& cfg) {
  if (M > kMaxSignOracleVectors) {
    throw EnumerationCapExceeded("wendel_sign_oracle: M = " + std::to_string(M) + " exceeds " +
                                 std::to_string(kMaxSignOracleVectors));
  }
  if (cfg.dim() != r || static_cast<int>(cfg.size()) != M) {
    throw DomainError("wendel_sign_oracle: configuration must hold M vectors in R^r");
  }
  if (!is_general_position(cfg)) throw DegenerateInput("wendel_sign_oracle: input not in general position");

  unsigned long misses = 0;
  const unsigned long patterns = 1UL << M;
  for (unsigned long mask = 0; mask < patterns; ++mask) {
    std::vector<Vector> signed_vectors = cfg.vectors();
    for (int i = 0; i < M; ++i) {
      if (mask & (1UL << i)) {
        for (Rational& q : signed_vectors[i]) q = -q;
      }
    }
    if (!origin_in_hull(VectorConfig(r, std::move(signed_vectors)))) ++misses;
  }
  return ExactProb(Rational(Integer(misses), Integer(patterns)));
}

bool is_affine_general_position(const PointConfiguration& pts) {
  const int d = pts.d();
  const int n = pts.N();
  std::vector<Vector> lifted;
  lifted.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vector y = pts[i];
    y.emplace_back(1);
    lifted.push_back(std::move(y));
  }
  const VectorConfig homogeneous(d + 1, std::move(lifted));
  IndexSet subset = first_combination(d + 1);
  do {
    std::vector<std::vector<Integer>> m;
    m.reserve(subset.size());
    for (int i : subset) m.push_back(homogeneous.scaled(i));
    if (sgn(integer_determinant(std::move(m))) == 0) return false;
  } while (next_combination(subset, n));
  return true;
}

FaceSetReport hull_faces(const PointConfiguration& pts, int k, std::uint64_t cap) {
  const int d = pts.d();
  const int n = pts.N();
  if (k < 0 || k > d - 1) throw DomainError("hull_faces: need 0 <= k <= d-1");
  check_enumeration_cap(n, k + 1, cap);
  if (!is_affine_general_position(pts)) {
    throw DegenerateInput("hull_faces: points are not in affine general position");
  }
  FaceSetReport report;
  report.k = k;
  IndexSet subset = first_combination(k + 1);
  do {
    // Unknowns (u_1..u_d, c).
    Matrix eq, le;
    Vector eq_rhs, le_rhs;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
      Vector row = pts[i];
      row.emplace_back(-1);
      if (p < subset.size() && subset[p] == i) {
        eq.push_back(std::move(row));
        eq_rhs.emplace_back(0);
        ++p;
      } else {
        le.push_back(std::move(row));
        le_rhs.emplace_back(-1);
      }
    }
    if (lp::find_point(eq, eq_rhs, le, le_rhs)) report.faces.push_back(subset);
  } while (next_combination(subset, n));
  return report;
}

FaceSetReport gale_faces(const GaleDiagram& diagram, int k, std::uint64_t cap) {
  diagram.dims(k).validate();
  check_enumeration_cap(diagram.N(), k + 1, cap);
  FaceSetReport report;
  report.k = k;
  IndexSet subset = first_combination(k + 1);
  do {
    if (is_face(diagram, subset)) report.faces.push_back(subset);
  } while (next_combination(subset, diagram.N()));
  return report;
}

RoundTripReport verify_gale_criterion(int d, int N, std::uint64_t trials, std::uint64_t seed,
                                      std::uint64_t cap) {
  const Dims dims{d, N, 0};
  dims.validate();
  for (int k = 0; k < d; ++k) check_enumeration_cap(N, k + 1, cap);

  RoundTripReport report;
  report.d = d;
  report.N = N;
  report.trials = trials;
  const SamplerConfig cfg{dims, Distribution::gaussian_iid, seed};
  for (std::uint64_t t = 0; t < trials; ++t) {
    const GaleDiagram diagram = sample_gale_diagram(cfg, t).value;
    const PointConfiguration pts = realize(diagram);
    bool agree = true;
    for (int k = 0; k < d; ++k) {
      const FaceSetReport by_gale = gale_faces(diagram, k, cap);
      const FaceSetReport by_hull = hull_faces(pts, k, cap);
      report.subsets_checked += binomial(N, k + 1).get_ui();
      if (by_gale.faces == by_hull.faces) continue;
      agree = false;
      // Report the first differing subset in lexicographic order.
      IndexSet subset = first_combination(k + 1);
      do {
        const auto has = [&](const FaceSetReport& r) {
          return std::binary_search(r.faces.begin(), r.faces.end(), subset);
        };
        if (has(by_gale) != has(by_hull)) {
          report.mismatches.push_back({t, k, subset, has(by_gale), has(by_hull),
                                       diagram.vectors().vectors(), pts.points()});
          break;
        }
      } while (next_combination(subset, N));
    }
    if (agree) ++report.passed;
  }
  return report;
}

}  // namespace galelab::oracle

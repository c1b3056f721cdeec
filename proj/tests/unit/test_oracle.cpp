#include <doctest.h>

#include <algorithm>

#include "galelab/errors.hpp"
#include "galelab/oracle.hpp"
#include "galelab/rng.hpp"
#include "galelab/subsets.hpp"

using namespace galelab;

namespace {

std::vector<Vector> rows(std::initializer_list<std::initializer_list<long>> list) {
  std::vector<Vector> out;
  for (auto r : list) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

VectorConfig gaussian_config(int dim, int n, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  std::vector<std::vector<double>> vs(n, std::vector<double>(dim));
  for (auto& v : vs) {
    for (double& x : v) x = rng.gaussian();
  }
  return VectorConfig::from_doubles(dim, vs);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("sign-pattern oracle") {
  CHECK(oracle::wendel_sign_oracle(1, 2, VectorConfig(1, rows({{1}, {2}}))).value() == Rational(1, 2));
  CHECK(oracle::wendel_sign_oracle(2, 3, gaussian_config(2, 3, 1)) == wendel(2, 3));
  CHECK(oracle::wendel_sign_oracle(3, 8, gaussian_config(3, 8, 2)).value() == Rational(29, 128));
  CHECK_THROWS_AS(oracle::wendel_sign_oracle(1, 21, gaussian_config(1, 21, 3)), EnumerationCapExceeded);
  CHECK_THROWS_AS(oracle::wendel_sign_oracle(2, 3, gaussian_config(3, 3, 3)), DomainError);
}

TEST_CASE("hull faces of small polygons") {
  const PointConfiguration square(2, rows({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(oracle::hull_faces(square, 1).faces == std::vector<IndexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(oracle::hull_faces(square, 0).faces.size() == 4);

  const PointConfiguration centroid(2, rows({{0, 0}, {3, 0}, {0, 3}, {1, 1}}));
  CHECK(oracle::hull_faces(centroid, 0).faces == std::vector<IndexSet>{{0}, {1}, {2}});

  CHECK_THROWS_AS(oracle::hull_faces(square, 2), DomainError);
  const PointConfiguration collinear(2, rows({{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
  CHECK_FALSE(oracle::is_affine_general_position(collinear));
  CHECK_THROWS_AS(oracle::hull_faces(collinear, 0), DegenerateInput);
}

TEST_CASE("hull faces are closed under taking subsets") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const Dims dims{3 + static_cast<int>(t % 2), 7 + static_cast<int>(t % 2), 0};
    const GaleDiagram g = sample_gale_diagram({dims, Distribution::gaussian_iid, 31}, t).value;
    const PointConfiguration pts = realize(g);
    std::vector<oracle::FaceSetReport> by_k;
    for (int k = 0; k < dims.d; ++k) by_k.push_back(oracle::hull_faces(pts, k));
    for (int k = 1; k < dims.d; ++k) {
      for (const IndexSet& face : by_k[k].faces) {
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
          IndexSet sub = face;
          sub.erase(sub.begin() + static_cast<long>(drop));
          CHECK(std::binary_search(by_k[k - 1].faces.begin(), by_k[k - 1].faces.end(), sub));
        }
      }
    }
  }
}

TEST_CASE("Gale criterion matches the hull oracle on realized diagrams") {
  const auto rep = oracle::verify_gale_criterion(3, 7, 20, 1);
  CHECK(rep.ok());
  CHECK(rep.passed == 20);
  CHECK(rep.subsets_checked == 20 * (7 + 21 + 35));
  const auto rep2 = oracle::verify_gale_criterion(2, 5, 30, 2);
  CHECK(rep2.ok());
  CHECK(rep2.passed == 30);
  CHECK_THROWS_AS(oracle::verify_gale_criterion(5, 20, 1, 1), EnumerationCapExceeded);
}

TEST_CASE("gale_faces layout") {
  const GaleDiagram g(2, VectorConfig(1, rows({{1}, {1}, {-1}, {-1}})));
  CHECK(oracle::gale_faces(g, 1).faces == std::vector<IndexSet>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const PointConfiguration pts = realize(g);
  CHECK(oracle::gale_faces(g, 1).faces == oracle::hull_faces(pts, 1).faces);
}

}

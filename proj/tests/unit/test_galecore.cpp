#include <doctest.h>

#include "galelab/errors.hpp"
#include "galelab/galecore.hpp"
#include "galelab/oracle.hpp"
#include "galelab/simulate.hpp"
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

GaleDiagram quadrilateral() { return GaleDiagram(2, VectorConfig(1, rows({{1}, {1}, {-1}, {-1}}))); }

Vector column_sum(const VectorConfig& c) {
  Vector s(c.dim(), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int r = 0; r < c.dim(); ++r) s[r] += c[i][r];
  }
  return s;
}

}  // namespace

TEST_SUITE("galecore") {

TEST_CASE("point configurations must affinely span") {
  CHECK_THROWS_AS(PointConfiguration(2, rows({{0, 0}, {1, 1}, {2, 2}, {3, 3}})), RankDeficient);
  CHECK_THROWS_AS(PointConfiguration(2, rows({{0, 0}, {1}})), DomainError);
  CHECK_NOTHROW(PointConfiguration(2, rows({{0, 0}, {1, 0}, {0, 1}})));
}

TEST_CASE("diagram invariants are enforced") {
  CHECK_THROWS_AS(GaleDiagram(2, VectorConfig(1, rows({{1}, {2}, {3}, {4}}))), DomainError);
  CHECK_THROWS_AS(GaleDiagram(1, VectorConfig(2, rows({{1, 0}, {0, 1}, {1, 1}, {2, 1}}))), DomainError);
  CHECK_THROWS_AS(GaleDiagram(1, VectorConfig(2, rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}))), DegenerateInput);
  CHECK_THROWS_AS(GaleDiagram(1, VectorConfig(2, rows({{1, 0}, {-1, 0}, {0, 1}}))), DomainError);
}

TEST_CASE("Gale transform of the unit square") {
  const PointConfiguration sq(2, rows({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  const VectorConfig g = gale_transform(sq);
  REQUIRE(g.dim() == 1);
  REQUIRE(g.size() == 4);
  const int s = sgn(g[0][0]);
  CHECK(s != 0);
  CHECK(sgn(g[1][0]) == -s);
  CHECK(sgn(g[2][0]) == s);
  CHECK(sgn(g[3][0]) == -s);
  CHECK(column_sum(g) == Vector{Rational(0)});
}

TEST_CASE("Gale transform of a triangle with its centroid") {
  const PointConfiguration pts(2, rows({{0, 0}, {3, 0}, {0, 3}, {1, 1}}));
  const VectorConfig g = gale_transform(pts);
  REQUIRE(g.dim() == 1);
  CHECK(g[0][0] == g[1][0]);
  CHECK(g[1][0] == g[2][0]);
  CHECK(g[3][0] == -3 * g[0][0]);
  CHECK(column_sum(g) == Vector{Rational(0)});
  CHECK_THROWS_AS(gale_transform(PointConfiguration(2, rows({{0, 0}, {1, 0}, {0, 1}}))), DomainError);
}

TEST_CASE("positive dependence") {
  const auto w = positive_dependence(quadrilateral());
  CHECK(w.lambda == Vector(4, Rational(1, 4)));
  const GaleDiagram tri(1, VectorConfig(1, rows({{2}, {-1}, {-1}})));
  CHECK(positive_dependence(tri).lambda == Vector(3, Rational(1, 3)));
  for (std::uint64_t t = 0; t < 1000; ++t) {
    const SamplerConfig sc{Dims{2 + static_cast<int>(t % 3), 7 + static_cast<int>(t % 2), 0},
                           Distribution::gaussian_iid, 21};
    const GaleDiagram g = sample_gale_diagram(sc, t).value;
    const auto lam = positive_dependence(g).lambda;
    Vector s(g.codim(), Rational(0));
    Rational total = 0;
    for (int i = 0; i < g.N(); ++i) {
      CHECK(lam[i] > 0);
      total += lam[i];
      for (int r = 0; r < g.codim(); ++r) s[r] += lam[i] * g.vectors()[i][r];
    }
    CHECK(total == 1);
    for (const Rational& q : s) CHECK(q == 0);
  }
}

TEST_CASE("faces of the quadrilateral diagram") {
  const GaleDiagram g = quadrilateral();
  CHECK(is_face(g, {}));
  CHECK(is_face(g, {0, 2}));
  CHECK_FALSE(is_face(g, {0, 1}));
  const FaceCount f1 = count_faces(g, 1);
  CHECK(f1.count == 4);
  CHECK_FALSE(f1.is_complete_neighborly);
  CHECK(count_faces(g, 0).count == 4);
  CHECK(is_k_neighborly(g, 1));
  CHECK_FALSE(is_k_neighborly(g, 2));
  CHECK_THROWS_AS(is_face(g, {0, 1, 2}), DomainError);
  CHECK_THROWS_AS(is_face(g, {1, 0}), DomainError);
  CHECK_THROWS_AS(is_face(g, {0, 4}), DomainError);
  CHECK_THROWS_AS(is_k_neighborly(g, 3), DomainError);
}

TEST_CASE("realize the quadrilateral") {
  const PointConfiguration pts = realize(quadrilateral());
  CHECK(pts.d() == 2);
  CHECK(pts.N() == 4);
  const auto edges = oracle::hull_faces(pts, 1);
  CHECK(edges.faces == std::vector<IndexSet>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(oracle::hull_faces(pts, 0).faces.size() == 4);
}

TEST_CASE("realize then transform preserves the face lattice") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    const Dims dims{2 + static_cast<int>(t % 3), 6 + static_cast<int>(t % 3), 0};
    const GaleDiagram g = sample_gale_diagram({dims, Distribution::gaussian_iid, 3}, t).value;
    const PointConfiguration pts = realize(g);
    const GaleDiagram back(g.d(), gale_transform(pts));
    for (int k = 0; k < g.d(); ++k) {
      IndexSet s = first_combination(k + 1);
      do {
        CHECK(is_face(g, s) == is_face(back, s));
      } while (next_combination(s, g.N()));
    }
  }
}

TEST_CASE("count bounds, cap and neighborliness monotonicity") {
  CHECK_THROWS_AS(check_enumeration_cap(30, 15, 1000), EnumerationCapExceeded);
  CHECK_NOTHROW(check_enumeration_cap(10, 3, 120));
  for (std::uint64_t t = 0; t < 200; ++t) {
    const int d = 2 + static_cast<int>(t % 7);            // 2..8
    const int n = d + 2 + static_cast<int>((t / 7) % 5);  // up to 16
    const GaleDiagram g = sample_gale_diagram({Dims{d, n, 0}, Distribution::gaussian_iid, 8}, t).value;
    bool prev = true;
    for (int j = 1; j <= d; ++j) {
      const FaceCount f = count_faces(g, j - 1);
      CHECK(f.count >= 0);
      CHECK(f.count <= binomial(n, j));
      const bool now = f.is_complete_neighborly;
      if (!prev) CHECK_FALSE(now);
      prev = now;
    }
  }
  const GaleDiagram g = sample_gale_diagram({Dims{3, 5, 0}, Distribution::gaussian_iid, 1}, 0).value;
  CHECK(count_faces(g, 2).count <= binomial(5, 3));
  CHECK_THROWS_AS(count_faces(g, 2, 5), EnumerationCapExceeded);
}

}

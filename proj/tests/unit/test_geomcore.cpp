#include <doctest.h>

#include "galelab/errors.hpp"
#include "galelab/geomcore.hpp"
#include "galelab/rng.hpp"

using namespace galelab;

namespace {

VectorConfig cfg(int dim, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    vs.push_back(std::move(v));
  }
  return VectorConfig(dim, std::move(vs));
}

VectorConfig gaussian_config(int dim, int n, std::uint64_t seed, std::uint64_t stream) {
  RandomStream rng(seed, stream);
  std::vector<std::vector<double>> vs(n, std::vector<double>(dim));
  for (auto& v : vs) {
    for (double& x : v) x = rng.gaussian();
  }
  return VectorConfig::from_doubles(dim, vs);
}

}  // namespace

TEST_SUITE("geomcore") {

TEST_CASE("VectorConfig validation and integer scaling") {
  CHECK_THROWS_AS(cfg(2, {{1, 0}, {0, 0}}), DomainError);
  CHECK_THROWS_AS(cfg(2, {{1, 0, 0}}), DomainError);
  std::vector<Vector> vs{{Rational(1, 2), Rational(-3, 4)}};
  const VectorConfig c(2, vs);
  CHECK(c.scale(0) == 4);
  CHECK(c.scaled(0) == std::vector<Integer>{2, -3});
}

TEST_CASE("general position") {
  CHECK(is_general_position(cfg(2, {{1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(is_general_position(cfg(2, {{1, 0}, {2, 0}, {0, 1}})));
  for (std::uint64_t t = 0; t < 1000; ++t) CHECK(is_general_position(gaussian_config(4, 10, 11, t)));
}

TEST_CASE("contains_origin examples") {
  const auto pair = contains_origin(cfg(1, {{1}, {-1}}));
  CHECK(pair.feasible);
  CHECK(pair.weights == Vector{Rational(1, 2), Rational(1, 2)});

  const VectorConfig open = cfg(2, {{1, 0}, {0, 1}, {1, 1}});
  const auto sep = contains_origin(open);
  CHECK_FALSE(sep.feasible);
  CHECK(sep.verify(open));
  for (std::size_t i = 0; i < open.size(); ++i) CHECK(dot(sep.functional, open[i]) > 0);

  const VectorConfig tri = cfg(2, {{1, 0}, {0, 1}, {-1, -1}});
  const auto in = contains_origin(tri);
  CHECK(in.feasible);
  CHECK(in.weights == Vector{Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(in.verify(tri));
}

TEST_CASE("interior containment") {
  CHECK(contains_origin_interior(cfg(2, {{1, 0}, {0, 1}, {-1, -1}})));
  CHECK(contains_origin_interior(cfg(1, {{1}, {-1}})));
  CHECK_FALSE(contains_origin_interior(cfg(2, {{1, 5}, {2, -3}, {7, 1}})));
  CHECK_THROWS_AS(contains_origin_interior(cfg(2, {{1, 0}, {-1, 0}, {0, 1}})), DegenerateInput);
}

TEST_CASE("fast path, exact simplex and certificate agree on random configurations") {
  for (std::uint64_t t = 0; t < 300; ++t) {
    const int dim = 1 + static_cast<int>(t % 5);
    const int n = dim + 1 + static_cast<int>(t % 4);
    const VectorConfig c = gaussian_config(dim, n, 5, t);
    const IndexSet all = all_indices(c.size());
    const auto fast = contains_origin(c);
    const auto exact = contains_origin_exact(c, all);
    CHECK(fast.feasible == exact.feasible);
    CHECK(origin_in_hull(c) == exact.feasible);
    CHECK(fast.verify(c));
    CHECK(exact.verify(c));
  }
}

TEST_CASE("subconfiguration certificates are indexed like idx") {
  const VectorConfig c = cfg(2, {{1, 0}, {5, 5}, {0, 1}, {-1, -1}});
  const IndexSet idx{0, 2, 3};
  const auto res = contains_origin(c, idx);
  CHECK(res.feasible);
  CHECK(res.weights.size() == 3);
  CHECK(res.verify(c, idx));
  CHECK_FALSE(origin_in_hull(c, IndexSet{0, 1, 2}));
  CHECK_THROWS_AS(contains_origin(c, IndexSet{}), DomainError);
}

TEST_CASE("integer determinant") {
  CHECK(integer_determinant({{2, 1}, {1, 3}}) == 5);
  CHECK(integer_determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 7}}) == -7);
  CHECK(integer_determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(integer_determinant({}) == 1);
}

}

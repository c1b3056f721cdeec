#include <doctest.h>

#include <cmath>
#include <set>

#include "galelab/rng.hpp"

using namespace galelab;

TEST_SUITE("rng") {

TEST_CASE("Philox4x32-10 known-answer vectors") {
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::apply(C{0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::apply(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::apply(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
  RandomStream a(42, 7), b(42, 7), c(42, 8), e(43, 7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    seen.insert(x);
    seen.insert(c.next_u64());
    seen.insert(e.next_u64());
  }
  CHECK(seen.size() == 300);
}

TEST_CASE("uniform and gaussian moments") {
  RandomStream r(1, 0);
  const int n = 200000;
  double su = 0, sg = 0, sg2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    CHECK_UNARY(u > 0.0);
    CHECK_UNARY(u < 1.0);
    su += u;
    const double g = r.gaussian();
    sg += g;
    sg2 += g * g;
  }
  CHECK(std::abs(su / n - 0.5) < 5 * std::sqrt(1.0 / 12.0 / n));
  CHECK(std::abs(sg / n) < 5 / std::sqrt(n));
  CHECK(std::abs(sg2 / n - 1.0) < 5 * std::sqrt(2.0 / n));
}

}

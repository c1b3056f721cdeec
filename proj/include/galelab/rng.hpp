#pragma once

// Philox4x32-10 counter-based generator. A stream is identified by
// (seed, stream id); its output depends on nothing else, so trials that each
// own a stream give identical results under any scheduling.

#include <array>
#include <cstdint>
#include <optional>

namespace galelab {

struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter ctr, Key key);
};

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller.
  double gaussian();

 private:
  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  std::optional<double> spare_;
};

}  // namespace galelab

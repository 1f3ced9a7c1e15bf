#pragma once

#include <cstdint>

namespace fpgarepair {

/// splitmix64. Fixed algorithm so seeded runs reproduce byte-for-byte across
/// standard libraries; std::uniform_int_distribution makes no such promise.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound); bound > 0. Modulo bias is negligible for
  /// the small bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform draw from the inclusive range [lo, hi].
  int in_range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

private:
  std::uint64_t state_;
};

}  // namespace fpgarepair

#pragma once

#include <cstdint>

namespace irrmult {

/// splitmix64. Hand-rolled instead of <random> because the standard
/// distributions are implementation-defined and the fuzz campaign promises
/// byte-identical output for a given seed on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [lo, hi]; the tiny modulo bias is irrelevant for
  /// test-case generation and keeps the stream platform-stable.
  int bounded(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

}  // namespace irrmult

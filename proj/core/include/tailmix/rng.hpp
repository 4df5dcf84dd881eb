// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace tailmix {

// splitmix64 finalizer; full-avalanche mix of a 64-bit word.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic pseudo-random stream (splitmix64 core).  Every derived
// variate is produced by arithmetic pinned down here, not delegated to
// implementation-defined standard library distributions, so sequences are
// bit-identical across platforms and compilers.  Streams for replication r
// of a study are derived from the master seed with `substream`, which makes
// results independent of how replications are scheduled across threads.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) noexcept : state_(seed) {}

  static RngStream substream(std::uint64_t master_seed,
                             std::uint64_t index) noexcept {
    return RngStream(mix64(master_seed ^ mix64(0x9E3779B97F4A7C15ull * (index + 1))));
  }

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) noexcept { return next_unit() < p; }

  // Standard normal by the Marsaglia polar method; the second variate of
  // each accepted pair is cached.
  double next_normal() noexcept;

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tailmix

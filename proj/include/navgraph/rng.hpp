// Copyright 2026-present the navgraph authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace navgraph {

// All randomness in this project comes from SplitMix64 (Steele/Lea/Flood,
// as popularized by Vigna). It is a counter-based generator: the k-th output
// for a seed is mix64(seed + (k+1) * 0x9E3779B97F4A7C15), which makes every
// randomized procedure a pure function of (parameters, seed), independent of
// platform, thread count and call interleaving. Platform RNGs
// (std::mt19937, rand) are deliberately not used anywhere.

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// k-th element (k = 0, 1, ...) of the SplitMix64 stream for `seed`.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
  return mix64(seed + (k + 1) * kSplitMix64Gamma);
}

/// Seed of an independent substream. `tag` separates call sites that share
/// one user seed; `index` is typically a node id, so per-node streams can be
/// drawn in any order (or in parallel) without changing the output.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag,
                                       std::uint64_t index) {
  return mix64(mix64(seed ^ tag) + (index + 1) * kSplitMix64Gamma);
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kSplitMix64Gamma;
    return mix64(state_);
  }

  /// Unbiased uniform draw from [0, bound), bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    // Reject the wrap-around remainder of the 2^64 range.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r = next();
    while (r < threshold) r = next();
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace navgraph

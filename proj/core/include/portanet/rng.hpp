// Copyright 2026 The Portanet Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PORTANET_RNG_HPP_
#define PORTANET_RNG_HPP_

#include <cstdint>
#include <string_view>

namespace portanet {

/// Splitmix64 step. Cheap, stateless-friendly, and good enough for
/// reproducible synthetic weights; not a cryptographic generator.
inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seeded splitmix64 stream.
class SplitMix {
 public:
  explicit SplitMix(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_uniform(double lo, double hi) {
    return lo + next_unit() * (hi - lo);
  }

 private:
  uint64_t state_;
};

/// FNV-1a over arbitrary bytes; used for graph hashing and for deriving
/// per-tensor seeds from names.
inline uint64_t fnv1a64(std::string_view bytes, uint64_t h = 0xCBF29CE484222325ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Derives the seed for one named weight tensor from the graph master seed.
inline uint64_t derive_seed(uint64_t master_seed, std::string_view tensor_name) {
  uint64_t s = master_seed ^ fnv1a64(tensor_name);
  return splitmix64(s);
}

}  // namespace portanet

#endif  // PORTANET_RNG_HPP_

#pragma once

#include <cstdint>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Deterministic cross-platform generator (splitmix64). The same seed yields
// identical instances, and hence identical serialized bytes, everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [1, hi]; hi >= 1.
  long uniform(long hi) { return static_cast<long>(next() % static_cast<std::uint64_t>(hi)) + 1; }

  // Uniform in [0, hi).
  std::size_t index(std::size_t hi) { return static_cast<std::size_t>(next() % hi); }

 private:
  std::uint64_t state_;
};

enum class GenDist { Uniform, CorrelatedWithMarket, IdenticalRanking };

struct GenSpec {
  int n = 2;
  int m = 4;
  GenDist dist = GenDist::Uniform;
  long max_value = 10;       // integer grid 1..max_value
  Value mix = Value(1, 2);   // weight on the market value for Correlated
  std::uint64_t seed = 1;
};

Instance generate_instance(const GenSpec& spec);

}  // namespace fairdiv

#pragma once

#include <cstdint>
#include <random>

namespace deplm {

// Deterministic substream addressed by (seed, replication, tag). Streams with
// different addresses are mutually independent for simulation purposes, and a
// given address reproduces the same draws on every platform: mt19937_64 plus
// inverse-CDF sampling only, no implementation-defined distributions.
class RngStream {
 public:
  enum class Tag : std::uint64_t { generic = 0, errors = 1, design = 2 };

  RngStream(std::uint64_t seed, std::uint64_t replication, Tag tag);

  // Uniform draw strictly inside (0,1).
  double uniform01();

  // Fair coin.
  bool bernoulli_half();

  // Standard normal via the quantile transform.
  double gaussian();

 private:
  std::mt19937_64 engine_;
};

}  // namespace deplm

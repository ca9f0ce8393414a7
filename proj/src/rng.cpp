#include "deplm/rng.hpp"

#include "deplm/prob.hpp"

namespace deplm {

RngStream::RngStream(std::uint64_t seed, std::uint64_t replication, Tag tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(replication),
                    static_cast<std::uint32_t>(replication >> 32),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(tag))};
  engine_.seed(seq);
}

double RngStream::uniform01() {
  // 53-bit mantissa offset to the cell midpoint: never exactly 0 or 1.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

bool RngStream::bernoulli_half() { return (engine_() >> 63) != 0; }

double RngStream::gaussian() { return normal_quantile(uniform01()); }

}  // namespace deplm

#pragma once

#include <cstdint>
#include <random>

namespace tropid {

/// Independent generator for (seed, stream). Work item i always draws from
/// stream i, so results do not depend on thread count or scheduling.
inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace tropid

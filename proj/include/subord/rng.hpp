#pragma once

#include <cstdint>
#include <random>

namespace subord {

// Counter-based stream splitting: every (seed, stream, index) triple gets its
// own engine, so trial i can be replayed without running trials 0..i-1.
inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Uniform double in [0,1) built from the top 53 bits; identical on every
// standard library, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

}  // namespace subord

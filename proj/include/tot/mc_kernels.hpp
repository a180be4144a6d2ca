#pragma once

#include <cstdint>
#include <random>

#include "tot/measure.hpp"

namespace tot::mc {

inline constexpr std::int64_t kBlockSize = std::int64_t{1} << 16;

std::uint64_t splitmix64(std::uint64_t x);

/// Engine for block k of the stream with the given master seed.
std::mt19937_64 block_engine(std::uint64_t seed, std::int64_t block);

/// Uniform draw in [0, 2pi) from the top 53 bits.
double uniform_angle(std::mt19937_64& engine);

struct RegionCounts {
  std::int64_t samples = 0;
  std::int64_t obtuse = 0;
  std::int64_t acute = 0;
  std::int64_t positive = 0;
  std::int64_t negative = 0;
  std::int64_t boundary = 0;

  RegionCounts& operator+=(const RegionCounts& o);
  bool operator==(const RegionCounts&) const = default;
};

/// Counts over the first `count` samples of block `block` (count <= kBlockSize).
RegionCounts count_block(std::uint64_t seed, std::int64_t block, std::int64_t count);

/// Samples in block `block` of a stream of n samples.
std::int64_t block_length(std::int64_t n, std::int64_t block);

/// Reference implementation: blocks in order on the calling thread.
RegionCounts count_regions_serial(std::uint64_t seed, std::int64_t n);

/// Blocks distributed over OpenMP threads; integer counts make the merge
/// order-independent, so the result equals the serial one exactly.
RegionCounts count_regions_parallel(std::uint64_t seed, std::int64_t n);

}  // namespace tot::mc

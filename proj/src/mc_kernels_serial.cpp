#include "tot/mc_kernels.hpp"

#include <algorithm>
#include <numbers>

namespace tot::mc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 block_engine(std::uint64_t seed, std::int64_t block) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ static_cast<std::uint64_t>(block));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

double uniform_angle(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53 * (2.0 * std::numbers::pi);
}

RegionCounts& RegionCounts::operator+=(const RegionCounts& o) {
  samples += o.samples;
  obtuse += o.obtuse;
  acute += o.acute;
  positive += o.positive;
  negative += o.negative;
  boundary += o.boundary;
  return *this;
}

std::int64_t block_length(std::int64_t n, std::int64_t block) {
  return std::clamp<std::int64_t>(n - block * kBlockSize, 0, kBlockSize);
}

RegionCounts count_block(std::uint64_t seed, std::int64_t block, std::int64_t count) {
  auto engine = block_engine(seed, block);
  RegionCounts c;
  c.samples = count;
  for (std::int64_t i = 0; i < count; ++i) {
    FloatPoint p;
    p.xi1 = uniform_angle(engine);
    p.xi2 = uniform_angle(engine);
    const FloatClass fc = classify_float(p);
    c.obtuse += fc.obtuse;
    c.acute += fc.acute;
    c.boundary += fc.boundary;
    c.positive += fc.orientation == OrientationSign::Positive;
    c.negative += fc.orientation == OrientationSign::Negative;
  }
  return c;
}

RegionCounts count_regions_serial(std::uint64_t seed, std::int64_t n) {
  RegionCounts total;
  const std::int64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  for (std::int64_t k = 0; k < blocks; ++k) total += count_block(seed, k, block_length(n, k));
  return total;
}

}  // namespace tot::mc

#include "tot/mc_kernels.hpp"

namespace tot::mc {

RegionCounts count_regions_parallel(std::uint64_t seed, std::int64_t n) {
  const std::int64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  std::int64_t samples = 0, obtuse = 0, acute = 0, positive = 0, negative = 0, boundary = 0;

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : samples, obtuse, acute, positive, negative, boundary)
  for (std::int64_t k = 0; k < blocks; ++k) {
    const RegionCounts c = count_block(seed, k, block_length(n, k));
    samples += c.samples;
    obtuse += c.obtuse;
    acute += c.acute;
    positive += c.positive;
    negative += c.negative;
    boundary += c.boundary;
  }

  return {samples, obtuse, acute, positive, negative, boundary};
}

}  // namespace tot::mc

#pragma once

#include <cstdint>
#include <random>

#include "tot/angle_core.hpp"
#include "tot/torus.hpp"

namespace tot::testing {

inline PiRational pi(std::int64_t p, std::int64_t q = 1) { return PiRational(p, q); }

inline TorusPoint point(std::int64_t p1, std::int64_t q1, std::int64_t p2, std::int64_t q2) {
  return TorusPoint(PiRational(p1, q1), PiRational(p2, q2));
}

/// Random rational multiple of pi in [0, 2pi) with denominator <= max_den.
inline PiRational random_angle(std::mt19937_64& rng, std::int64_t max_den = 60) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> num(0, 2 * q - 1);
  return PiRational(num(rng), q);
}

inline TorusPoint random_point(std::mt19937_64& rng, std::int64_t max_den = 60) {
  return TorusPoint(random_angle(rng, max_den), random_angle(rng, max_den));
}

/// Random valid triple on either sheet, grid spacing pi/q.
inline AngleTriple random_triple(std::mt19937_64& rng, std::int64_t max_den = 60) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  const std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> a_dist(0, q);
  const std::int64_t a = a_dist(rng);
  std::uniform_int_distribution<std::int64_t> b_dist(0, q - a);
  const std::int64_t b = b_dist(rng);
  const std::int64_t s = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  return make_triple(PiRational(s * a, q), PiRational(s * b, q), PiRational(s * (q - a - b), q));
}

/// Random degenerate point other than the identity.
inline TorusPoint random_degenerate_point(std::mt19937_64& rng, std::int64_t max_den = 60) {
  for (;;) {
    const PiRational x = random_angle(rng, max_den);
    if (x.is_zero()) continue;
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: return TorusPoint(x, PiRational{});
      case 1: return TorusPoint(PiRational{}, x);
      default: return TorusPoint(x, x);
    }
  }
}

}  // namespace tot::testing

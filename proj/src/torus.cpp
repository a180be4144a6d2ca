#include "tot/torus.hpp"

#include <numeric>

#include "tot/error.hpp"

namespace tot {

namespace {

const PiRational kPi{1};

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) throw Error(ErrorKind::Overflow, "element order exceeds 64 bits");
  return out;
}

// additive order of x in R / 2piZ
std::int64_t coordinate_order(const PiRational& x) {
  const PiRational r = x.mod_two_pi();
  if (r.is_zero()) return 1;
  // n * num/den in 2Z  <=>  n = 2den / gcd(num, 2den)
  const std::int64_t two_den = r.den() * 2;
  return two_den / std::gcd(r.num(), two_den);
}

}  // namespace

std::string to_string(OrientationSign o) {
  switch (o) {
    case OrientationSign::Positive: return "positive";
    case OrientationSign::Zero: return "zero";
    case OrientationSign::Negative: return "negative";
  }
  return "?";
}

std::string_view to_string(LocusId l) {
  switch (l) {
    case LocusId::D_A: return "D_A";
    case LocusId::D_B: return "D_B";
    case LocusId::D_C: return "D_C";
    case LocusId::I_A: return "I_A";
    case LocusId::I_B: return "I_B";
    case LocusId::I_C: return "I_C";
    case LocusId::R_A: return "R_A";
    case LocusId::R_B: return "R_B";
    case LocusId::R_C: return "R_C";
    case LocusId::IPerp_A: return "IPerp_A";
    case LocusId::IPerp_B: return "IPerp_B";
    case LocusId::AntiRight: return "AntiRight";
    case LocusId::Equilateral3: return "Equilateral3";
  }
  return "?";
}

std::optional<LocusId> parse_locus(std::string_view name) {
  for (LocusId l : kAllLoci)
    if (to_string(l) == name) return l;
  return std::nullopt;
}

std::optional<LinearLocus> linear_form(LocusId l) {
  switch (l) {
    case LocusId::D_A: return LinearLocus{0, 1, PiRational{}};        // xi2 = 0
    case LocusId::D_B: return LinearLocus{1, 0, PiRational{}};        // xi1 = 0
    case LocusId::D_C: return LinearLocus{1, -1, PiRational{}};       // xi1 = xi2
    case LocusId::I_A: return LinearLocus{-2, 1, PiRational{}};       // xi2 = 2 xi1
    case LocusId::I_B: return LinearLocus{1, -2, PiRational{}};       // xi1 = 2 xi2
    case LocusId::I_C: return LinearLocus{1, 1, PiRational{}};        // xi1 + xi2 = 0
    case LocusId::R_A: return LinearLocus{0, 1, kPi};                 // xi2 = pi
    case LocusId::R_B: return LinearLocus{1, 0, kPi};                 // xi1 = pi
    case LocusId::R_C: return LinearLocus{-1, 1, kPi};                // xi2 = xi1 + pi
    case LocusId::IPerp_A: return LinearLocus{1, 2, PiRational{}};    // xi1 = -2 xi2
    case LocusId::IPerp_B: return LinearLocus{2, 1, PiRational{}};    // xi2 = -2 xi1
    case LocusId::AntiRight: return LinearLocus{1, 1, kPi};           // xi2 = pi - xi1
    case LocusId::Equilateral3: return std::nullopt;
  }
  return std::nullopt;
}

TorusPoint rho(const AngleTriple& t) { return TorusPoint(t.beta().twice(), -t.alpha().twice()); }

std::vector<AngleTriple> rho_preimages(const TorusPoint& p) {
  const PiRational& x1 = p.xi1();
  const PiRational& x2 = p.xi2();
  const PiRational zero{};

  if (x1.is_zero() && x2.is_zero()) {
    return {make_triple(kPi, zero, zero),  make_triple(zero, kPi, zero),  make_triple(zero, zero, kPi),
            make_triple(-kPi, zero, zero), make_triple(zero, -kPi, zero), make_triple(zero, zero, -kPi)};
  }
  if (x2.is_zero()) {
    const PiRational beta = x1.half();
    return {make_triple(zero, beta, kPi - beta), make_triple(zero, beta - kPi, -beta)};
  }
  if (x1.is_zero()) {
    const PiRational alpha = kPi - x2.half();
    return {make_triple(alpha, zero, kPi - alpha), make_triple(alpha - kPi, zero, -alpha)};
  }
  if (x1 == x2) {
    const PiRational beta = x1.half();
    return {make_triple(kPi - beta, beta, zero), make_triple(-beta, beta - kPi, zero)};
  }
  const PiRational gamma = (x2 - x1).half();
  if (x2 > x1) return {make_triple(kPi - x2.half(), x1.half(), gamma)};
  return {make_triple(-x2.half(), x1.half() - kPi, gamma)};
}

TorusPoint project_relative(const PiRational& theta1, const PiRational& theta2, const PiRational& theta3) {
  return TorusPoint(theta1 - theta3, theta2 - theta3);
}

OrientationSign orientation(const TorusPoint& p) {
  if (p.degenerate()) return OrientationSign::Zero;
  return p.xi2() > p.xi1() ? OrientationSign::Positive : OrientationSign::Negative;
}

TorusPoint identity() { return TorusPoint{}; }

TorusPoint mul(const TorusPoint& p, const TorusPoint& q) { return TorusPoint(p.xi1() + q.xi1(), p.xi2() + q.xi2()); }

TorusPoint inverse(const TorusPoint& p) { return TorusPoint(-p.xi1(), -p.xi2()); }

TorusPoint pow(const TorusPoint& p, std::int64_t n) {
  // reduce n modulo the order first so large exponents cannot overflow
  const std::int64_t order = *element_order(p);
  std::int64_t k = n % order;
  if (k < 0) k += order;
  return TorusPoint(p.xi1() * k, p.xi2() * k);
}

std::optional<std::int64_t> element_order(const TorusPoint& p) {
  return lcm_checked(coordinate_order(p.xi1()), coordinate_order(p.xi2()));
}

bool in_locus(const TorusPoint& p, LocusId l) {
  if (l == LocusId::Equilateral3) {
    const PiRational two_thirds{2, 3};
    const PiRational four_thirds{4, 3};
    return p == identity() || p == TorusPoint(two_thirds, four_thirds) || p == TorusPoint(four_thirds, two_thirds);
  }
  const LinearLocus f = *linear_form(l);
  return (p.xi1() * f.a + p.xi2() * f.b - f.c).mod_two_pi().is_zero();
}

std::vector<LocusId> loci_containing(const TorusPoint& p) {
  std::vector<LocusId> out;
  for (LocusId l : kAllLoci)
    if (in_locus(p, l)) out.push_back(l);
  return out;
}

}  // namespace tot

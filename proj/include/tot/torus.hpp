#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tot/angle_core.hpp"
#include "tot/pi_rational.hpp"

namespace tot {

/// Point of the torus of relative arguments, (xi1, xi2) mod 2pi.
///
/// The pair stands for the inscribed triple (e^{i xi1}, e^{i xi2}, 1). Both
/// coordinates are kept in [0, 2pi); every constructor normalizes.
class TorusPoint {
 public:
  TorusPoint() = default;
  TorusPoint(const PiRational& xi1, const PiRational& xi2) : xi1_(xi1.mod_two_pi()), xi2_(xi2.mod_two_pi()) {}

  const PiRational& xi1() const { return xi1_; }
  const PiRational& xi2() const { return xi2_; }

  bool degenerate() const { return xi1_.is_zero() || xi2_.is_zero() || xi1_ == xi2_; }

  std::string str() const { return "(" + xi1_.str() + ", " + xi2_.str() + ")"; }

  bool operator==(const TorusPoint&) const = default;
  auto operator<=>(const TorusPoint&) const = default;

 private:
  PiRational xi1_;
  PiRational xi2_;
};

enum class OrientationSign { Positive, Zero, Negative };

std::string to_string(OrientationSign o);

enum class LocusId {
  D_A,
  D_B,
  D_C,
  I_A,
  I_B,
  I_C,
  R_A,
  R_B,
  R_C,
  IPerp_A,
  IPerp_B,
  AntiRight,
  Equilateral3,
};

inline constexpr std::array<LocusId, 13> kAllLoci{
    LocusId::D_A,     LocusId::D_B,     LocusId::D_C,       LocusId::I_A,         LocusId::I_B,
    LocusId::I_C,     LocusId::R_A,     LocusId::R_B,       LocusId::R_C,         LocusId::IPerp_A,
    LocusId::IPerp_B, LocusId::AntiRight, LocusId::Equilateral3};

std::string_view to_string(LocusId l);
std::optional<LocusId> parse_locus(std::string_view name);

/// A one-dimensional locus is the set {a*xi1 + b*xi2 = c (mod 2pi)}.
/// (a, b) is a primitive integer normal vector.
struct LinearLocus {
  int a;
  int b;
  PiRational c;
};

/// Residue equation of a one-dimensional locus; empty for Equilateral3.
std::optional<LinearLocus> linear_form(LocusId l);

// --- the map from angle triples to the torus

/// rho[alpha, beta, gamma] = (2 beta, -2 alpha) mod 2pi.
TorusPoint rho(const AngleTriple& t);

/// All triples mapping to p: one for a nondegenerate point, two for a
/// degenerate point other than the identity (Plus sheet first), six for the
/// identity in the order (pi,0,0), (0,pi,0), (0,0,pi), then the negatives.
std::vector<AngleTriple> rho_preimages(const TorusPoint& p);

/// (theta1 - theta3, theta2 - theta3) mod 2pi.
TorusPoint project_relative(const PiRational& theta1, const PiRational& theta2, const PiRational& theta3);

OrientationSign orientation(const TorusPoint& p);

// --- group law

TorusPoint identity();
TorusPoint mul(const TorusPoint& p, const TorusPoint& q);
TorusPoint inverse(const TorusPoint& p);
TorusPoint pow(const TorusPoint& p, std::int64_t n);

/// Least n >= 1 with p^n = identity. Always present for rational coordinates.
std::optional<std::int64_t> element_order(const TorusPoint& p);

bool in_locus(const TorusPoint& p, LocusId l);

/// Every locus that contains p, in LocusId order.
std::vector<LocusId> loci_containing(const TorusPoint& p);

}  // namespace tot

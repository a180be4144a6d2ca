#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tot/torus.hpp"

namespace tot {

/// Relative measure of a family: multiplicity of a generic member times the
/// geometric size of the family in T (area in rad^2 or length in rad).
struct FamilyMeasure {
  std::string name;
  double geometric_size = 0.0;
  int multiplicity = 1;
  bool is_area = true;

  double relative() const { return multiplicity * geometric_size; }
};

struct MeasureReport {
  // areas, rad^2
  double total = 0.0;
  double obtuse = 0.0;
  double acute = 0.0;
  // lengths, rad
  double isosceles = 0.0;
  double right = 0.0;
  double degenerate = 0.0;
  double obtuse_isosceles = 0.0;
  double acute_isosceles = 0.0;
  /// "O:A", "I:AI", "I:OI", "I:R", "D:R"
  std::map<std::string, double> ratios;
};

/// Per-family sizes and multiplicity factors in the order
/// T, O, A, I, R, D, OI, AI.
std::vector<FamilyMeasure> family_measures();

MeasureReport analytic_measures();

/// Length of a one-dimensional locus in T under the metric pulled back by rho
/// from the angle sheets. Throws Error(UnsupportedLocus) for Equilateral3.
double locus_length(LocusId l);

/// Area of the Plus sheet in angle space; the Minus sheet is congruent.
double sheet_area();

// --- Monte Carlo

struct FloatPoint {
  double xi1 = 0.0;
  double xi2 = 0.0;
};

/// Float classification of a sampled point. Points within the boundary
/// tolerance of a degenerate or right locus are neither obtuse nor acute.
struct FloatClass {
  OrientationSign orientation = OrientationSign::Zero;
  bool boundary = false;
  bool obtuse = false;
  bool acute = false;
};

inline constexpr double kBoundaryTolerance = 1e-12;

/// Signed distance of x to the nearest multiple of 2pi, in (-pi, pi].
double wrap_residue(double x);

/// Interior angles (radians) of the preimage of a nondegenerate float point.
std::array<double, 3> float_preimage(FloatPoint p);

FloatClass classify_float(FloatPoint p, double tolerance = kBoundaryTolerance);

/// Name of the generator behind every sample stream, recorded in reports.
inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-blocks";

/// n points uniform on [0, 2pi)^2. Deterministic in (seed, n): the stream is
/// split into fixed blocks whose engines are seeded from the master seed, so
/// serial and parallel consumers see the same points.
std::vector<FloatPoint> sample_uniform(std::uint64_t seed, std::int64_t n);

enum class Region { Obtuse, Acute, PositiveOrientation, NegativeOrientation };

std::string_view to_string(Region r);

struct McEstimate {
  double probability = 0.0;
  double standard_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Binomial estimate hits / n with standard error sqrt(p(1-p)/n).
McEstimate make_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed);

enum class Execution { Serial, Parallel };

McEstimate estimate_probability(Region region, std::int64_t n, std::uint64_t seed,
                                Execution exec = Execution::Parallel);

}  // namespace tot

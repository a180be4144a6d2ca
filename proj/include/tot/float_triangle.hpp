#pragma once

#include <array>
#include <vector>

#include "tot/angle_core.hpp"
#include "tot/measure.hpp"
#include "tot/torus.hpp"

namespace tot {

inline constexpr double kFloatTolerance = 1e-9;

/// Classification of an angle triple that has no exact rational form.
/// Every equality test is a residue test within the tolerance.
struct FloatTriangleReport {
  Sheet sheet = Sheet::Plus;
  std::array<double, 3> angles{};
  FloatPoint torus;
  OrientationSign orientation = OrientationSign::Zero;
  TypeFlags flags;
  std::vector<LocusId> loci;
  int multiplicity = 1;
  FloatPoint canonical;
};

/// Throws Error(SumNotPi) or Error(OutOfRange) with the same rules as
/// make_triple, up to the tolerance.
FloatTriangleReport classify_angles_float(double alpha, double beta, double gamma,
                                          double tolerance = kFloatTolerance);

/// Float counterpart of in_locus.
bool in_locus_float(FloatPoint p, LocusId l, double tolerance = kFloatTolerance);

}  // namespace tot

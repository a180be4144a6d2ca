#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tot/measure.hpp"
#include "tot/torus.hpp"

namespace tot {

enum class EventKind { Start, LocusCrossing, OrientationFlip, End };

std::string_view to_string(EventKind k);

struct PathEvent {
  std::int64_t step_index = 0;
  FloatPoint position;  // start of the step in which the event happened
  EventKind kind = EventKind::Start;
  std::optional<LocusId> locus;  // set for LocusCrossing and OrientationFlip
  FloatPoint refined_position;   // on the locus to within the refinement tolerance
  OrientationSign orientation_before = OrientationSign::Zero;
  OrientationSign orientation_after = OrientationSign::Zero;
};

struct PathOptions {
  std::int64_t steps = 100;
  double step_size = 0.01;
  bool include_anti_loci = false;
  double refine_tolerance = 1e-10;
};

inline constexpr double kPathResidueTolerance = 1e-9;

/// Orientation of a float point, degenerate only on an exact residue hit.
OrientationSign float_orientation(FloatPoint p);

/// Walks the straight line start + t * velocity with fixed steps, wrapping at
/// 2pi, and reports every crossing of the D, I, R loci (and the anti loci on
/// request). Each crossing is located by bisection. A crossing of D_A, D_B or
/// D_C is followed by an OrientationFlip event.
/// Throws Error(ZeroVelocity) for a zero velocity.
std::vector<PathEvent> trace_path(FloatPoint start, FloatPoint velocity, const PathOptions& options);

}  // namespace tot

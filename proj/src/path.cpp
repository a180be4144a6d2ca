#include "tot/path.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tot/error.hpp"

namespace tot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalized(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

FloatPoint wrapped(FloatPoint p) { return {normalized(p.xi1), normalized(p.xi2)}; }

bool is_degenerate_locus(LocusId l) { return l == LocusId::D_A || l == LocusId::D_B || l == LocusId::D_C; }

struct Crossing {
  double t;
  LocusId locus;
  FloatPoint point;  // unwrapped
};

}  // namespace

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::Start: return "start";
    case EventKind::LocusCrossing: return "crossing";
    case EventKind::OrientationFlip: return "orientation-flip";
    case EventKind::End: return "end";
  }
  return "?";
}

OrientationSign float_orientation(FloatPoint p) {
  const FloatPoint w = wrapped(p);
  if (w.xi1 == 0.0 || w.xi2 == 0.0 || w.xi1 == w.xi2) return OrientationSign::Zero;
  return w.xi2 > w.xi1 ? OrientationSign::Positive : OrientationSign::Negative;
}

std::vector<PathEvent> trace_path(FloatPoint start, FloatPoint velocity, const PathOptions& options) {
  if (velocity.xi1 == 0.0 && velocity.xi2 == 0.0) throw Error(ErrorKind::ZeroVelocity, "velocity must be nonzero");
  if (options.steps < 0 || !(options.step_size > 0.0))
    throw Error(ErrorKind::InvalidArgument, "steps must be >= 0 and step size > 0");

  std::vector<LocusId> tracked{LocusId::D_A, LocusId::D_B, LocusId::D_C, LocusId::I_A, LocusId::I_B,
                               LocusId::I_C, LocusId::R_A, LocusId::R_B, LocusId::R_C};
  if (options.include_anti_loci) {
    tracked.insert(tracked.end(), {LocusId::IPerp_A, LocusId::IPerp_B, LocusId::AntiRight});
  }

  const double speed = std::hypot(velocity.xi1, velocity.xi2);
  const double nudge = 1e-7 / speed;
  auto at = [&](double s) { return FloatPoint{start.xi1 + s * velocity.xi1, start.xi2 + s * velocity.xi2}; };

  std::vector<PathEvent> events;
  PathEvent first;
  first.kind = EventKind::Start;
  first.position = first.refined_position = wrapped(start);
  first.orientation_before = first.orientation_after = float_orientation(start);
  events.push_back(first);

  for (std::int64_t k = 0; k < options.steps; ++k) {
    const double s0 = static_cast<double>(k) * options.step_size;
    const double s1 = static_cast<double>(k + 1) * options.step_size;
    std::vector<Crossing> found;

    for (LocusId l : tracked) {
      const LinearLocus f = *linear_form(l);
      auto residue = [&](double s) {
        const FloatPoint p = at(s);
        return f.a * p.xi1 + f.b * p.xi2 - f.c.radians();
      };
      const double g0 = residue(s0);
      const double g1 = residue(s1);
      if (g0 == g1) continue;
      // multiples of 2pi in (g0, g1] (ascending) or [g1, g0) (descending)
      std::int64_t lo, hi;
      if (g1 > g0) {
        lo = static_cast<std::int64_t>(std::floor(g0 / kTwoPi)) + 1;
        hi = static_cast<std::int64_t>(std::floor(g1 / kTwoPi));
      } else {
        lo = static_cast<std::int64_t>(std::ceil(g1 / kTwoPi));
        hi = static_cast<std::int64_t>(std::ceil(g0 / kTwoPi)) - 1;
      }
      for (std::int64_t m = lo; m <= hi; ++m) {
        const double target = kTwoPi * static_cast<double>(m);
        double a = s0, b = s1;
        const bool ascending = g1 > g0;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (a + b);
          const double v = residue(mid) - target;
          if (std::abs(v) <= options.refine_tolerance) {
            a = b = mid;
            break;
          }
          if ((v < 0) == ascending) {
            a = mid;
          } else {
            b = mid;
          }
        }
        const double s = 0.5 * (a + b);
        found.push_back({s, l, at(s)});
      }
    }

    std::sort(found.begin(), found.end(), [](const Crossing& x, const Crossing& y) {
      return x.t != y.t ? x.t < y.t : static_cast<int>(x.locus) < static_cast<int>(y.locus);
    });
    for (const Crossing& c : found) {
      PathEvent e;
      e.step_index = k;
      e.position = wrapped(at(s0));
      e.kind = EventKind::LocusCrossing;
      e.locus = c.locus;
      e.refined_position = wrapped(c.point);
      e.orientation_before = float_orientation(at(c.t - nudge));
      e.orientation_after = float_orientation(at(c.t + nudge));
      events.push_back(e);
      if (is_degenerate_locus(c.locus)) {
        e.kind = EventKind::OrientationFlip;
        events.push_back(e);
      }
    }
  }

  PathEvent last;
  last.kind = EventKind::End;
  last.step_index = options.steps;
  const FloatPoint end = at(static_cast<double>(options.steps) * options.step_size);
  last.position = last.refined_position = wrapped(end);
  last.orientation_before = last.orientation_after = float_orientation(end);
  events.push_back(last);
  return events;
}

}  // namespace tot

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tot/measure.hpp"
#include "tot/torus.hpp"

namespace tot {

struct PlotOptions {
  double size_px = 600.0;
  double margin_px = 40.0;
  bool anti_loci = false;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::string positive_fill = "#f7e26b";
  std::string negative_fill = "#cfcfcf";
};

struct PixelPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Screen position of a torus point in the [0, 2pi]^2 fundamental domain,
/// xi1 to the right and xi2 upwards.
PixelPoint to_pixel(FloatPoint p, const PlotOptions& options);

struct Segment {
  FloatPoint from;
  FloatPoint to;
};

/// Pieces of a one-dimensional locus inside the closed square [0, 2pi]^2.
std::vector<Segment> locus_segments(LocusId l);

/// The loci drawn by default: D, I and R for each vertex.
std::vector<LocusId> plotted_loci(bool anti_loci);

/// SVG 1.1 document of the fundamental domain: border, oriented regions, one
/// <path class="locus"> per locus, the torsion points, and optional samples.
std::string render_svg(const PlotOptions& options);

}  // namespace tot

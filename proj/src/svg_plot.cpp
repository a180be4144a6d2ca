#include "tot/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace tot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

struct Special {
  FloatPoint p;
  const char* kind;
};

std::vector<Special> special_points() {
  std::vector<Special> out;
  for (FloatPoint corner : {FloatPoint{0, 0}, FloatPoint{kTwoPi, 0}, FloatPoint{0, kTwoPi}, FloatPoint{kTwoPi, kTwoPi}})
    out.push_back({corner, "identity"});
  out.push_back({{2 * kPi / 3, 4 * kPi / 3}, "equilateral"});
  out.push_back({{4 * kPi / 3, 2 * kPi / 3}, "equilateral"});
  for (FloatPoint p : {FloatPoint{kPi, 0}, FloatPoint{0, kPi}, FloatPoint{kPi, kPi}})
    out.push_back({p, "degenerate-isosceles"});
  for (FloatPoint p : {FloatPoint{kPi / 2, kPi}, FloatPoint{3 * kPi / 2, kPi}, FloatPoint{kPi / 2, 3 * kPi / 2},
                       FloatPoint{3 * kPi / 2, kPi / 2}, FloatPoint{kPi, 3 * kPi / 2}, FloatPoint{kPi, kPi / 2}})
    out.push_back({p, "right-isosceles"});
  return out;
}

std::string num(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

PixelPoint to_pixel(FloatPoint p, const PlotOptions& options) {
  const double scale = options.size_px / kTwoPi;
  return {options.margin_px + p.xi1 * scale, options.margin_px + options.size_px - p.xi2 * scale};
}

std::vector<Segment> locus_segments(LocusId l) {
  std::vector<Segment> out;
  const auto form = linear_form(l);
  if (!form) return out;
  // a u + b v = c/2pi + m over the unit square
  const double a = form->a, b = form->b;
  const double c = form->c.radians() / kTwoPi;
  const double lo = std::min({0.0, a, b, a + b}) - c;
  const double hi = std::max({0.0, a, b, a + b}) - c;
  constexpr double eps = 1e-12;
  for (auto m = static_cast<long>(std::ceil(lo - eps)); m <= static_cast<long>(std::floor(hi + eps)); ++m) {
    const double k = c + static_cast<double>(m);
    std::vector<FloatPoint> hits;
    if (b != 0) {
      for (double u : {0.0, 1.0}) {
        const double v = (k - a * u) / b;
        if (v >= -eps && v <= 1 + eps) hits.push_back({u, std::clamp(v, 0.0, 1.0)});
      }
    }
    if (a != 0) {
      for (double v : {0.0, 1.0}) {
        const double u = (k - b * v) / a;
        if (u >= -eps && u <= 1 + eps) hits.push_back({std::clamp(u, 0.0, 1.0), v});
      }
    }
    if (hits.size() < 2) continue;
    auto key = [&](FloatPoint p) { return b != 0 ? p.xi1 : p.xi2; };
    auto [mn, mx] = std::minmax_element(hits.begin(), hits.end(),
                                        [&](FloatPoint x, FloatPoint y) { return key(x) < key(y); });
    if (std::abs(key(*mx) - key(*mn)) < 1e-9) continue;
    out.push_back({{mn->xi1 * kTwoPi, mn->xi2 * kTwoPi}, {mx->xi1 * kTwoPi, mx->xi2 * kTwoPi}});
  }
  return out;
}

std::vector<LocusId> plotted_loci(bool anti_loci) {
  std::vector<LocusId> out{LocusId::D_A, LocusId::D_B, LocusId::D_C, LocusId::I_A, LocusId::I_B,
                           LocusId::I_C, LocusId::R_A, LocusId::R_B, LocusId::R_C};
  if (anti_loci) out.insert(out.end(), {LocusId::IPerp_A, LocusId::IPerp_B, LocusId::AntiRight});
  return out;
}

std::string render_svg(const PlotOptions& options) {
  const double full = options.size_px + 2 * options.margin_px;
  std::ostringstream os;
  auto px = [&](FloatPoint p) {
    const PixelPoint q = to_pixel(p, options);
    return num(q.x) + "," + num(q.y);
  };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(full) << "\" height=\""
     << num(full) << "\" viewBox=\"0 0 " << num(full) << " " << num(full) << "\">\n";
  os << "  <title>Torus of triangles: fundamental domain</title>\n";

  os << "  <g id=\"regions\">\n";
  os << "    <polygon class=\"region positive\" fill=\"" << options.positive_fill << "\" points=\""
     << px({0, 0}) << " " << px({kTwoPi, kTwoPi}) << " " << px({0, kTwoPi}) << "\"/>\n";
  os << "    <polygon class=\"region negative\" fill=\"" << options.negative_fill << "\" points=\""
     << px({0, 0}) << " " << px({kTwoPi, 0}) << " " << px({kTwoPi, kTwoPi}) << "\"/>\n";
  os << "  </g>\n";

  os << "  <rect class=\"border\" x=\"" << num(options.margin_px) << "\" y=\"" << num(options.margin_px)
     << "\" width=\"" << num(options.size_px) << "\" height=\"" << num(options.size_px)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  os << "  <g id=\"loci\" fill=\"none\">\n";
  for (LocusId l : plotted_loci(options.anti_loci)) {
    const char* family = "right";
    const std::string name(to_string(l));
    if (name[0] == 'D') family = "degenerate";
    if (name[0] == 'I' && name[1] == '_') family = "isosceles";
    if (l == LocusId::IPerp_A || l == LocusId::IPerp_B || l == LocusId::AntiRight) family = "anti";
    os << "    <path class=\"locus " << family << "\" id=\"locus-" << name << "\" d=\"";
    bool first = true;
    for (const Segment& s : locus_segments(l)) {
      os << (first ? "" : " ") << "M" << px(s.from) << " L" << px(s.to);
      first = false;
    }
    os << "\" stroke=\"black\" stroke-width=\"1\"";
    if (std::string_view(family) == "anti") os << " stroke-dasharray=\"4 3\"";
    os << "/>\n";
  }
  os << "  </g>\n";

  if (options.samples > 0) {
    os << "  <g id=\"samples\">\n";
    for (const FloatPoint& p : sample_uniform(options.seed, options.samples)) {
      const FloatClass c = classify_float(p);
      if (c.boundary) continue;
      const PixelPoint q = to_pixel(p, options);
      os << "    <circle class=\"sample " << (c.obtuse ? "obtuse" : "acute") << "\" cx=\"" << num(q.x)
         << "\" cy=\"" << num(q.y) << "\" r=\"1\" fill=\"" << (c.obtuse ? "#b03030" : "#3050b0") << "\"/>\n";
    }
    os << "  </g>\n";
  }

  os << "  <g id=\"special-points\">\n";
  for (const Special& s : special_points()) {
    const PixelPoint q = to_pixel(s.p, options);
    os << "    <circle class=\"special " << s.kind << "\" cx=\"" << num(q.x) << "\" cy=\"" << num(q.y)
       << "\" r=\"4\" fill=\"black\"/>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tot

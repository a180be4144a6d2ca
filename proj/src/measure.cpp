#include "tot/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tot/error.hpp"
#include "tot/mc_kernels.hpp"

namespace tot {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec3 {
  double x, y, z;

  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 cross(const Vec3& o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
};

double triangle_area(const Vec3& p, const Vec3& q, const Vec3& r) { return 0.5 * (q - p).cross(r - p).norm(); }

// Plus-sheet point with `apex_angle` at vertex v and the rest split evenly.
Vec3 isosceles_point(int v, double apex_angle) {
  double c[3];
  for (double& x : c) x = (kPi - apex_angle) / 2.0;
  c[v] = apex_angle;
  return {c[0], c[1], c[2]};
}

double normalize_angle(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

}  // namespace

double sheet_area() { return triangle_area({kPi, 0, 0}, {0, kPi, 0}, {0, 0, kPi}); }

double locus_length(LocusId l) {
  const auto form = linear_form(l);
  if (!form) throw Error(ErrorKind::UnsupportedLocus, std::string(to_string(l)) + " is not one-dimensional");
  // one turn of the closed geodesic along the primitive direction (-b, a)
  const double d1 = kTwoPi * -form->b;
  const double d2 = kTwoPi * form->a;
  // xi1 = 2 beta, xi2 = -2 alpha (mod 2pi), gamma = +-pi - alpha - beta
  const Vec3 angles{-d2 / 2.0, d1 / 2.0, (d2 - d1) / 2.0};
  return angles.norm();
}

std::vector<FamilyMeasure> family_measures() {
  const double sheets = 2.0;

  double acute = 0.0;
  {
    const Vec3 ab{kPi / 2, kPi / 2, 0}, bc{0, kPi / 2, kPi / 2}, ca{kPi / 2, 0, kPi / 2};
    acute = sheets * triangle_area(ab, bc, ca);
  }
  double obtuse = 0.0;
  for (int v = 0; v < 3; ++v) {
    Vec3 corner = isosceles_point(v, kPi);
    // the two midpoints adjacent to this corner: the angle at v is pi/2 there
    double m1[3] = {0, 0, 0}, m2[3] = {0, 0, 0};
    m1[v] = m2[v] = kPi / 2;
    m1[(v + 1) % 3] = kPi / 2;
    m2[(v + 2) % 3] = kPi / 2;
    obtuse += sheets * triangle_area(corner, {m1[0], m1[1], m1[2]}, {m2[0], m2[1], m2[2]});
  }

  double isosceles = 0.0, right = 0.0, degenerate = 0.0;
  for (LocusId l : {LocusId::I_A, LocusId::I_B, LocusId::I_C}) isosceles += locus_length(l);
  for (LocusId l : {LocusId::R_A, LocusId::R_B, LocusId::R_C}) right += locus_length(l);
  for (LocusId l : {LocusId::D_A, LocusId::D_B, LocusId::D_C}) degenerate += locus_length(l);

  double obtuse_iso = 0.0, acute_iso = 0.0;
  for (int v = 0; v < 3; ++v) {
    const Vec3 right_point = isosceles_point(v, kPi / 2);
    obtuse_iso += sheets * (isosceles_point(v, kPi) - right_point).norm();
    acute_iso += sheets * (right_point - isosceles_point(v, 0.0)).norm();
  }

  return {
      {"T", sheets * sheet_area(), 1, true},
      {"O", obtuse, 1, true},
      {"A", acute, 1, true},
      {"I", isosceles, 2, false},
      {"R", right, 1, false},
      {"D", degenerate, 2, false},
      {"OI", obtuse_iso, 2, false},
      {"AI", acute_iso, 2, false},
  };
}

MeasureReport analytic_measures() {
  const auto fam = family_measures();
  auto rel = [&](std::string_view name) {
    return std::find_if(fam.begin(), fam.end(), [&](const FamilyMeasure& f) { return f.name == name; })->relative();
  };
  MeasureReport r;
  r.total = rel("T");
  r.obtuse = rel("O");
  r.acute = rel("A");
  r.isosceles = rel("I");
  r.right = rel("R");
  r.degenerate = rel("D");
  r.obtuse_isosceles = rel("OI");
  r.acute_isosceles = rel("AI");
  r.ratios = {
      {"O:A", r.obtuse / r.acute},
      {"I:AI", r.isosceles / r.acute_isosceles},
      {"I:OI", r.isosceles / r.obtuse_isosceles},
      {"I:R", r.isosceles / r.right},
      {"D:R", r.degenerate / r.right},
  };
  return r;
}

double wrap_residue(double x) {
  double r = std::remainder(x, kTwoPi);
  return r == -kPi ? kPi : r;
}

std::array<double, 3> float_preimage(FloatPoint p) {
  const double x1 = normalize_angle(p.xi1);
  const double x2 = normalize_angle(p.xi2);
  const double gamma = (x2 - x1) / 2.0;
  if (x2 > x1) return {kPi - x2 / 2.0, x1 / 2.0, gamma};
  return {-x2 / 2.0, x1 / 2.0 - kPi, gamma};
}

FloatClass classify_float(FloatPoint p, double tolerance) {
  FloatClass c;
  const double x1 = normalize_angle(p.xi1);
  const double x2 = normalize_angle(p.xi2);
  const bool degenerate = std::abs(wrap_residue(x1)) <= tolerance || std::abs(wrap_residue(x2)) <= tolerance ||
                          std::abs(wrap_residue(x1 - x2)) <= tolerance;
  if (degenerate) {
    c.boundary = true;
    return c;
  }
  c.orientation = x2 > x1 ? OrientationSign::Positive : OrientationSign::Negative;
  const bool right = std::abs(wrap_residue(x2 - kPi)) <= tolerance || std::abs(wrap_residue(x1 - kPi)) <= tolerance ||
                     std::abs(wrap_residue(x2 - x1 - kPi)) <= tolerance;
  if (right) {
    c.boundary = true;
    return c;
  }
  const auto angles = float_preimage({x1, x2});
  double largest = 0.0;
  for (double a : angles) largest = std::max(largest, std::abs(a));
  c.obtuse = largest > kPi / 2;
  c.acute = !c.obtuse;
  return c;
}

std::vector<FloatPoint> sample_uniform(std::uint64_t seed, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  std::vector<FloatPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  const std::int64_t blocks = (n + mc::kBlockSize - 1) / mc::kBlockSize;
  for (std::int64_t k = 0; k < blocks; ++k) {
    auto engine = mc::block_engine(seed, k);
    for (std::int64_t i = 0, len = mc::block_length(n, k); i < len; ++i) {
      FloatPoint p;
      p.xi1 = mc::uniform_angle(engine);
      p.xi2 = mc::uniform_angle(engine);
      out.push_back(p);
    }
  }
  return out;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::Obtuse: return "obtuse";
    case Region::Acute: return "acute";
    case Region::PositiveOrientation: return "positive";
    case Region::NegativeOrientation: return "negative";
  }
  return "?";
}

McEstimate estimate_probability(Region region, std::int64_t n, std::uint64_t seed, Execution exec) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  const mc::RegionCounts c =
      exec == Execution::Serial ? mc::count_regions_serial(seed, n) : mc::count_regions_parallel(seed, n);
  std::int64_t hits = 0;
  switch (region) {
    case Region::Obtuse: hits = c.obtuse; break;
    case Region::Acute: hits = c.acute; break;
    case Region::PositiveOrientation: hits = c.positive; break;
    case Region::NegativeOrientation: hits = c.negative; break;
  }
  return make_estimate(hits, n, seed);
}

McEstimate make_estimate(std::int64_t hits, std::int64_t n, std::uint64_t seed) {
  McEstimate e;
  e.samples = n;
  e.seed = seed;
  e.probability = static_cast<double>(hits) / static_cast<double>(n);
  e.standard_error = std::sqrt(e.probability * (1.0 - e.probability) / static_cast<double>(n));
  return e;
}

}  // namespace tot

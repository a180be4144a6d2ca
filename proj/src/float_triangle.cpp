#include "tot/float_triangle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tot/error.hpp"
#include "tot/symmetry.hpp"

namespace tot {

namespace {

constexpr double kPi = std::numbers::pi;

double normalized(double x) {
  double r = std::fmod(x, 2 * kPi);
  if (r < 0) r += 2 * kPi;
  return r >= 2 * kPi ? 0.0 : r;
}

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

bool same_point(FloatPoint p, FloatPoint q, double tol) {
  return std::abs(wrap_residue(p.xi1 - q.xi1)) <= tol && std::abs(wrap_residue(p.xi2 - q.xi2)) <= tol;
}

FloatPoint act_float(const GroupElement& g, FloatPoint p) {
  const Mat2 m = matrix_of(g);
  return {normalized(m[0][0] * p.xi1 + m[0][1] * p.xi2), normalized(m[1][0] * p.xi1 + m[1][1] * p.xi2)};
}

TypeFlags float_taxonomy(const std::array<double, 3>& angles, double tol) {
  TypeFlags f;
  std::array<double, 3> abs{std::abs(angles[0]), std::abs(angles[1]), std::abs(angles[2])};
  const int zeros = static_cast<int>(std::count_if(abs.begin(), abs.end(), [&](double a) { return a <= tol; }));
  f.degenerate = zeros > 0;
  constexpr std::array<Vertex, 3> vs{Vertex::A, Vertex::B, Vertex::C};
  if (zeros >= 2) {
    f.equilateral = true;
    f.isosceles_vertices = VertexSet::all();
    return f;
  }
  if (zeros == 1) {
    for (int i = 0; i < 3; ++i) {
      if (abs[i] <= tol && near(abs[(i + 1) % 3], kPi / 2, tol)) {
        f.isosceles_vertices.insert(vs[i]);
        f.right_vertices.insert(vs[(i + 1) % 3]);
        f.right_vertices.insert(vs[(i + 2) % 3]);
      }
    }
    f.scalene = f.isosceles_vertices.empty();
    return f;
  }
  for (int i = 0; i < 3; ++i) {
    if (near(abs[(i + 1) % 3], abs[(i + 2) % 3], tol)) f.isosceles_vertices.insert(vs[i]);
    if (near(abs[i], kPi / 2, tol)) f.right_vertices.insert(vs[i]);
  }
  f.equilateral = f.isosceles_vertices.size() == 3;
  f.scalene = f.isosceles_vertices.empty();
  const double largest = *std::max_element(abs.begin(), abs.end());
  f.obtuse = largest > kPi / 2 + tol;
  f.acute = largest < kPi / 2 - tol;
  return f;
}

}  // namespace

bool in_locus_float(FloatPoint p, LocusId l, double tolerance) {
  if (l == LocusId::Equilateral3) {
    return same_point(p, {0, 0}, tolerance) || same_point(p, {2 * kPi / 3, 4 * kPi / 3}, tolerance) ||
           same_point(p, {4 * kPi / 3, 2 * kPi / 3}, tolerance);
  }
  const LinearLocus f = *linear_form(l);
  return std::abs(wrap_residue(f.a * p.xi1 + f.b * p.xi2 - f.c.radians())) <= tolerance;
}

FloatTriangleReport classify_angles_float(double alpha, double beta, double gamma, double tolerance) {
  FloatTriangleReport r;
  const double sum = alpha + beta + gamma;
  if (near(sum, kPi, tolerance)) {
    r.sheet = Sheet::Plus;
  } else if (near(sum, -kPi, tolerance)) {
    r.sheet = Sheet::Minus;
  } else {
    throw Error(ErrorKind::SumNotPi, "angles sum to " + std::to_string(sum) + " rad");
  }
  const double lo = r.sheet == Sheet::Plus ? -tolerance : -kPi - tolerance;
  const double hi = r.sheet == Sheet::Plus ? kPi + tolerance : tolerance;
  for (double a : {alpha, beta, gamma}) {
    if (a < lo || a > hi) throw Error(ErrorKind::OutOfRange, "angle " + std::to_string(a) + " rad outside the sheet");
  }
  r.angles = {alpha, beta, gamma};
  r.torus = {normalized(2 * beta), normalized(-2 * alpha)};
  r.flags = float_taxonomy(r.angles, tolerance);
  if (r.flags.degenerate) {
    r.orientation = OrientationSign::Zero;
  } else {
    r.orientation = r.sheet == Sheet::Plus ? OrientationSign::Positive : OrientationSign::Negative;
  }
  for (LocusId l : kAllLoci)
    if (in_locus_float(r.torus, l, 2 * tolerance)) r.loci.push_back(l);

  int fixed = 0;
  std::vector<FloatPoint> images;
  for (const auto& g : all_elements()) {
    const FloatPoint q = act_float(g, r.torus);
    if (same_point(q, r.torus, 2 * tolerance)) ++fixed;
    images.push_back(q);
  }
  r.multiplicity = fixed;
  r.canonical = *std::min_element(images.begin(), images.end(), [](FloatPoint a, FloatPoint b) {
    return a.xi1 != b.xi1 ? a.xi1 < b.xi1 : a.xi2 < b.xi2;
  });
  return r;
}

}  // namespace tot

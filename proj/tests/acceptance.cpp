// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "tot/classification.hpp"
#include "tot/measure.hpp"
#include "tot/path.hpp"
#include "tot/symmetry.hpp"

using namespace tot;
using testing::point;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRelTol = 1e-12;
constexpr double kPathTol = 1e-9;
constexpr double kChiSquare15At001 = 37.69729821835383;
constexpr double kOrientationBand = 0.0015;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

bool rel_close(double got, double want) { return std::abs(got - want) <= kRelTol * std::abs(want); }

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Check closed_forms() {
  Check c;
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0), pi2 = kPi * kPi;
  const MeasureReport m = analytic_measures();
  const std::pair<const char*, std::pair<double, double>> rows[] = {
      {"T", {m.total, s3 * pi2}},
      {"O", {m.obtuse, 3 * s3 / 4 * pi2}},
      {"A", {m.acute, s3 / 4 * pi2}},
      {"I", {m.isosceles, 6 * s6 * kPi}},
      {"R", {m.right, 3 * s2 * kPi}},
      {"D", {m.degenerate, 6 * s2 * kPi}},
      {"OI", {m.obtuse_isosceles, 3 * s6 * kPi}},
      {"AI", {m.acute_isosceles, 3 * s6 * kPi}},
  };
  for (const auto& [name, v] : rows)
    c.expect(rel_close(v.first, v.second), std::string("mu(") + name + ") = " + num(v.first) + ", want " + num(v.second));
  const std::pair<const char*, double> ratios[] = {
      {"O:A", 3.0}, {"I:AI", 2.0}, {"I:OI", 2.0}, {"I:R", 2 * s3}, {"D:R", 2.0}};
  for (const auto& [key, want] : ratios) {
    const double got = m.ratios.at(key);
    c.expect(rel_close(got, want), std::string(key) + " = " + num(got));
  }
  return c;
}

Check monte_carlo_obtuse() {
  Check c;
  constexpr std::int64_t n = 1'000'000;
  const double band = 3 * std::sqrt(0.75 * 0.25 / n);
  for (std::uint64_t seed : {1ULL, 2ULL, 20261019ULL}) {
    const McEstimate e = estimate_probability(Region::Obtuse, n, seed);
    c.expect(std::abs(e.probability - 0.75) <= band,
             "seed " + std::to_string(seed) + ": P(O) = " + num(e.probability));
  }
  return c;
}

Check multiplicity_table() {
  Check c;
  const std::pair<TorusPoint, int> witnesses[] = {
      {point(0, 1, 0, 1), 12}, {point(2, 3, 4, 3), 6}, {point(1, 1, 1, 1), 4},
      {point(2, 3, 0, 1), 2},  {point(1, 2, 1, 1), 2}, {point(1, 5, 3, 7), 1},
  };
  for (const auto& [p, want] : witnesses) {
    const int got = multiplicity(p);
    c.expect(got == want, p.str() + " -> " + std::to_string(got));
    c.expect(static_cast<int>(stabilizer(p).size()) == want, p.str() + " stabilizer size");
  }
  return c;
}

Check preimage_structure() {
  Check c;
  const auto id = rho_preimages(identity());
  const PiRational z{}, one(1);
  const std::vector<AngleTriple> vertices{
      make_triple(one, z, z), make_triple(z, one, z), make_triple(z, z, one),
      make_triple(-one, z, z), make_triple(z, -one, z), make_triple(z, z, -one)};
  c.expect(id.size() == 6, "identity has " + std::to_string(id.size()) + " preimages");
  for (const auto& v : vertices)
    c.expect(std::find(id.begin(), id.end(), v) != id.end(), "identity preimages miss " + v.str());

  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const TorusPoint p = testing::random_degenerate_point(rng);
    const auto pre = rho_preimages(p);
    const bool one_per_sheet =
        pre.size() == 2 && pre[0].sheet() != pre[1].sheet() && rho(pre[0]) == p && rho(pre[1]) == p;
    c.expect(one_per_sheet, "degenerate " + p.str());
  }

  constexpr std::int64_t q = 200;
  for (std::int64_t s : {1, -1})
    for (std::int64_t i = 0; i <= q; ++i)
      for (std::int64_t j = 0; i + j <= q; ++j) {
        const AngleTriple t = make_triple(PiRational(s * i, q), PiRational(s * j, q), PiRational(s * (q - i - j), q));
        const TorusPoint p = rho(t);
        const auto pre = rho_preimages(p);
        c.expect(std::find(pre.begin(), pre.end(), t) != pre.end(), "round trip " + t.str());
        for (const auto& u : pre) c.expect(rho(u) == p, "preimage maps back " + u.str());
        if (!t.degenerate()) c.expect(pre.size() == 1, "nondegenerate " + t.str() + " has one preimage");
      }
  return c;
}

Check group_and_action() {
  Check c;
  std::mt19937_64 rng(77);
  const auto& g = all_elements();
  constexpr int points = 10'000;
  std::vector<TorusPoint> sample;
  sample.reserve(points);
  for (int i = 0; i < points; ++i) sample.push_back(testing::random_point(rng));

  for (int i = 0; i < points; ++i) {
    const TorusPoint& p = sample[i];
    const TorusPoint& q = sample[(i + 1) % points];
    const TorusPoint& r = sample[(i + 7) % points];
    c.expect(mul(mul(p, q), r) == mul(p, mul(q, r)), "associativity at " + p.str());
    c.expect(mul(p, q) == mul(q, p), "commutativity at " + p.str());
    c.expect(mul(p, identity()) == p, "identity at " + p.str());
    c.expect(mul(p, inverse(p)) == identity(), "inverse at " + p.str());
  }

  for (int i = 0; i < points; ++i) {
    const TorusPoint& p = sample[i];
    if (i < 1000)
      for (const auto& a : g)
        for (const auto& b : g)
          c.expect(act(compose(a, b), p) == act(a, act(b, p)), "left action " + a.str() + "," + b.str());
    c.expect(act(g[0], p) == p, "identity element acts trivially");
    for (const auto& a : g) c.expect(act(a, mul(p, sample[(i + 3) % points])) ==
                                         mul(act(a, p), act(a, sample[(i + 3) % points])),
                                     "action by automorphisms");

    const auto orb = orbit(p);
    c.expect(orb.size() * multiplicity(p) == 12, "orbit-stabilizer at " + p.str());
    const TypeFlags f = classify(p).flags;
    for (const auto& o : orb) {
      const TypeFlags h = classify(o).flags;
      c.expect(h.equilateral == f.equilateral && h.isosceles_vertices.size() == f.isosceles_vertices.size() &&
                   h.right_vertices.size() == f.right_vertices.size() && h.scalene == f.scalene &&
                   h.degenerate == f.degenerate && h.obtuse == f.obtuse && h.acute == f.acute,
               "flags vary on orbit of " + p.str());
    }
  }

  auto members = [&](LocusId l) {
    std::vector<TorusPoint> out;
    for (const auto& p : sample)
      if (in_locus(p, l)) out.push_back(p);
    // the coarse sample rarely hits a locus; add grid points on it
    for (std::int64_t a = 0; a < 24; ++a)
      for (std::int64_t b = 0; b < 24; ++b) {
        const TorusPoint p(PiRational(a, 12), PiRational(b, 12));
        if (in_locus(p, l)) out.push_back(p);
      }
    return out;
  };
  for (LocusId l : {LocusId::D_A, LocusId::D_B, LocusId::D_C, LocusId::I_A, LocusId::I_B, LocusId::I_C,
                    LocusId::IPerp_A, LocusId::IPerp_B, LocusId::Equilateral3}) {
    const auto m = members(l);
    c.expect(m.size() >= 3, std::string("too few members of ") + std::string(to_string(l)));
    c.expect(in_locus(identity(), l), "identity outside subgroup");
    for (const auto& p : m) {
      c.expect(in_locus(inverse(p), l), std::string("inverse leaves ") + std::string(to_string(l)));
      for (const auto& q : m) c.expect(in_locus(mul(p, q), l), std::string("product leaves ") + std::string(to_string(l)));
    }
  }
  const std::pair<LocusId, LocusId> cosets[] = {
      {LocusId::R_A, LocusId::D_A}, {LocusId::R_B, LocusId::D_B}, {LocusId::R_C, LocusId::D_C},
      {LocusId::AntiRight, LocusId::I_C}};
  for (const auto& [coset, sub] : cosets) {
    const auto cm = members(coset), sm = members(sub);
    const std::string name(to_string(coset));
    c.expect(!cm.empty(), "empty coset " + name);
    c.expect(!in_locus(identity(), coset), name + " contains identity");
    for (const auto& r : cm) {
      for (const auto& d : sm) c.expect(in_locus(mul(r, d), coset), name + " not stable under subgroup");
      for (const auto& r2 : cm) c.expect(in_locus(mul(r, inverse(r2)), sub), name + " differences leave subgroup");
    }
  }

  c.expect(element_order(point(2, 3, 4, 3)) == 3, "order of (2pi/3, 4pi/3)");
  c.expect(element_order(point(1, 1, 0, 1)) == 2, "order of (pi, 0)");
  c.expect(element_order(point(1, 2, 1, 1)) == 4, "order of (pi/2, pi)");
  c.expect(pow(point(1, 2, 1, 1), 4) == identity(), "(pi/2, pi)^4");
  return c;
}

Check orientation_flip() {
  Check c;
  PathOptions o;
  o.steps = 300;
  o.step_size = 0.01;
  const auto events = trace_path({2 * kPi / 3, 4 * kPi / 3}, {1, 0}, o);
  const auto it = std::find_if(events.begin(), events.end(), [](const PathEvent& e) {
    return e.kind == EventKind::OrientationFlip && e.locus == LocusId::D_C;
  });
  c.expect(it != events.end(), "no flip on D_C");
  if (it == events.end()) return c;
  c.expect(it->orientation_before == OrientationSign::Positive, "before is not positive");
  c.expect(it->orientation_after == OrientationSign::Negative, "after is not negative");
  const double residue = std::abs(wrap_residue(it->refined_position.xi1 - it->refined_position.xi2));
  c.expect(residue <= kPathTol, "residue " + num(residue));
  return c;
}

Check uniformity() {
  Check c;
  constexpr std::int64_t n = 1'000'000;
  const auto pts = sample_uniform(12345, n);
  std::array<std::int64_t, 16> boxes{};
  std::int64_t positive = 0, negative = 0;
  for (const auto& p : pts) {
    const int i = std::min(3, static_cast<int>(p.xi1 / (kPi / 2)));
    const int j = std::min(3, static_cast<int>(p.xi2 / (kPi / 2)));
    ++boxes[4 * i + j];
    const auto o = classify_float(p).orientation;
    positive += o == OrientationSign::Positive;
    negative += o == OrientationSign::Negative;
  }
  const double expected = n / 16.0;
  double chi2 = 0;
  for (auto b : boxes) chi2 += (b - expected) * (b - expected) / expected;
  c.expect(chi2 < kChiSquare15At001, "chi-square " + num(chi2));
  const double frac = static_cast<double>(positive) / n;
  c.expect(std::abs(frac - 0.5) <= kOrientationBand, "positive fraction " + num(frac));
  c.expect(positive + negative >= n - 10, "too many boundary samples");
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"1 measure closed forms", closed_forms},
      {"2 monte carlo obtuse probability", monte_carlo_obtuse},
      {"3 multiplicity table", multiplicity_table},
      {"4 preimage structure", preimage_structure},
      {"5 group and action properties", group_and_action},
      {"6 orientation flip", orientation_flip},
      {"7 uniformity oracle", uniformity},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Check c = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s  %-34s %7.3fs%s%s\n", c.ok ? "PASS" : "FAIL", name, secs, c.ok ? "" : "  ", c.detail.c_str());
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}

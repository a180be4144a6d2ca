#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "tot/classification.hpp"
#include "tot/symmetry.hpp"

using namespace tot;
using tot::testing::pi;
using tot::testing::point;

namespace {

GroupElement el(Sign s, Perm p) { return {s, p}; }

// +-sigma acting on a triple of arguments: (+-theta_sigma(1), +-theta_sigma(2), +-theta_sigma(3))
std::array<PiRational, 3> act_on_arguments(const GroupElement& g, const std::array<PiRational, 3>& theta) {
  std::array<int, 3> sigma{};
  switch (g.perm) {
    case Perm::e: sigma = {0, 1, 2}; break;
    case Perm::c123: sigma = {1, 2, 0}; break;
    case Perm::c132: sigma = {2, 0, 1}; break;
    case Perm::t12: sigma = {1, 0, 2}; break;
    case Perm::t13: sigma = {2, 1, 0}; break;
    case Perm::t23: sigma = {0, 2, 1}; break;
  }
  std::array<PiRational, 3> out;
  for (int i = 0; i < 3; ++i) out[i] = g.sign == Sign::Plus ? theta[sigma[i]] : -theta[sigma[i]];
  return out;
}

}  // namespace

TEST_CASE("twelve distinct elements, closed under composition") {
  const auto& all = all_elements();
  CHECK(all.size() == 12);
  std::set<std::array<int, 4>> mats;
  for (const auto& g : all) {
    const Mat2 m = matrix_of(g);
    mats.insert({m[0][0], m[0][1], m[1][0], m[1][1]});
  }
  CHECK(mats.size() == 12);
  for (const auto& g : all)
    for (const auto& h : all) CHECK(matrix_of(compose(g, h)) == matrix_of(g) * matrix_of(h));

  const GroupElement s = el(Sign::Minus, Perm::t12);
  CHECK(compose(s, s) == GroupElement{});
  CHECK(to_word(el(Sign::Minus, Perm::c123)) == D6Word{1, false});
  for (const auto& g : all) CHECK(compose(g, inverse(g)) == GroupElement{});
}

TEST_CASE("matrices come from relabeling the arguments") {
  // the 2x2 matrix of +-sigma must agree with acting on (theta1, theta2, theta3)
  // and then taking relative arguments
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const std::array<PiRational, 3> theta{testing::random_angle(rng), testing::random_angle(rng),
                                          testing::random_angle(rng)};
    const TorusPoint p = project_relative(theta[0], theta[1], theta[2]);
    for (const auto& g : all_elements()) {
      const auto moved = act_on_arguments(g, theta);
      CHECK(act(g, p) == project_relative(moved[0], moved[1], moved[2]));
    }
  }
}

TEST_CASE("D6 dictionary") {
  const std::pair<GroupElement, D6Word> table[] = {
      {el(Sign::Minus, Perm::c123), {1, false}}, {el(Sign::Minus, Perm::t12), {0, true}},
      {el(Sign::Minus, Perm::e), {3, false}},    {el(Sign::Plus, Perm::c123), {4, false}},
      {el(Sign::Plus, Perm::t12), {3, true}},    {el(Sign::Plus, Perm::t13), {5, true}},
      {el(Sign::Plus, Perm::t23), {1, true}},    {el(Sign::Minus, Perm::t13), {2, true}},
      {el(Sign::Minus, Perm::t23), {4, true}},   {el(Sign::Plus, Perm::e), {0, false}},
  };
  for (const auto& [g, w] : table) {
    CAPTURE(g.str());
    CHECK(to_word(g) == w);
    CHECK(from_word(w) == g);
  }
  for (const auto& g : all_elements()) {
    CAPTURE(g.str());
    CHECK(word_matrix(to_word(g)) == matrix_of(g));
  }
  CHECK(word_matrix({6, false}) == matrix_of(GroupElement{}));
  CHECK(to_word(el(Sign::Minus, Perm::c132)).str() == "r^5");
  CHECK(to_word(el(Sign::Minus, Perm::t13)).str() == "r^2s");
}

TEST_CASE("act examples") {
  CHECK(act(el(Sign::Minus, Perm::e), point(1, 2, 1, 1)) == point(3, 2, 1, 1));
  CHECK(act(GroupElement{}, point(1, 7, 9, 7)) == point(1, 7, 9, 7));
  CHECK(act(el(Sign::Plus, Perm::t12), point(1, 5, 3, 5)) == point(3, 5, 1, 5));
}

TEST_CASE("left action and conjugation") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const TorusPoint p = testing::random_point(rng);
    CHECK(act(GroupElement{}, p) == p);
    for (const auto& g : all_elements())
      for (const auto& h : all_elements()) CHECK(act(compose(g, h), p) == act(g, act(h, p)));
    CHECK(act(el(Sign::Minus, Perm::e), p) == inverse(p));
    if (!p.degenerate()) CHECK(orientation(act(el(Sign::Minus, Perm::e), p)) != orientation(p));
  }
}

TEST_CASE("orbits and multiplicities") {
  CHECK(orbit(identity()) == std::vector<TorusPoint>{identity()});
  CHECK(orbit(point(2, 3, 4, 3)) == std::vector<TorusPoint>{point(2, 3, 4, 3), point(4, 3, 2, 3)});
  CHECK(orbit(point(1, 5, 3, 7)).size() == 12);

  CHECK(multiplicity(identity()) == 12);
  CHECK(multiplicity(point(2, 3, 4, 3)) == 6);
  CHECK(multiplicity(point(1, 1, 1, 1)) == 4);
  CHECK(multiplicity(point(2, 3, 0, 1)) == 2);
  CHECK(multiplicity(point(1, 2, 1, 1)) == 2);
  CHECK(multiplicity(point(1, 5, 3, 7)) == 1);

  // stabilizers named in the multiplicity proof
  const GroupElement r3s = from_word({3, true});
  CHECK(act(r3s, point(2, 3, 4, 3)) == point(4, 3, 2, 3));
  CHECK(stabilizer(point(2, 3, 4, 3)).size() == 6);
  const auto half = rho(make_triple(pi(1, 2), pi(1, 2), pi(0)));
  const auto stab = stabilizer(half);
  CHECK(stab.size() == 4);
  CHECK(std::find(stab.begin(), stab.end(), from_word({3, false})) != stab.end());
  CHECK(std::find(stab.begin(), stab.end(), from_word({0, true})) != stab.end());
}

TEST_CASE("multiplicity follows the triangle type") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 3000; ++i) {
    const AngleTriple t = testing::random_triple(rng, 30);
    const TorusPoint p = rho(t);
    const TypeFlags f = taxonomy(t);
    int expected = 0;
    if (f.degenerate) {
      expected = f.equilateral ? 12 : (f.isosceles() ? 4 : 2);
    } else {
      expected = f.equilateral ? 6 : (f.isosceles() ? 2 : 1);
    }
    CAPTURE(t.str());
    CHECK(multiplicity(p) == expected);
    CHECK(orbit(p).size() * multiplicity(p) == 12);
    CHECK(static_cast<int>(stabilizer(p).size()) == multiplicity(p));
  }
}

TEST_CASE("types are constant on orbits") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 1000; ++i) {
    const TorusPoint p = testing::random_point(rng, 24);
    const TypeFlags f = classify(p).flags;
    for (const auto& q : orbit(p)) {
      const TypeFlags g = classify(q).flags;
      CHECK(g.equilateral == f.equilateral);
      CHECK(g.isosceles() == f.isosceles());
      CHECK(g.right() == f.right());
      CHECK(g.scalene == f.scalene);
      CHECK(g.degenerate == f.degenerate);
      CHECK(g.obtuse == f.obtuse);
      CHECK(g.acute == f.acute);
    }
  }
}

TEST_CASE("canonical representatives and similarity") {
  CHECK(canonical_rep(point(4, 3, 2, 3)) == point(2, 3, 4, 3));
  CHECK(canonical_rep(identity()) == identity());
  CHECK(canonical_rep(canonical_rep(point(1, 5, 3, 7))) == canonical_rep(point(1, 5, 3, 7)));

  auto r = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return rho(make_triple(pi(a, d), pi(b, d), pi(c, d)));
  };
  CHECK(similar(r(2, 1, 1, 4), r(1, 2, 1, 4)));
  CHECK(similar(r(1, 1, 1, 3), r(-1, -1, -1, 3)));
  CHECK_FALSE(similar(r(2, 1, 1, 4), r(1, 1, 1, 3)));

  // similar iff the absolute angle multisets agree
  std::mt19937_64 rng(47);
  for (int i = 0; i < 2000; ++i) {
    const AngleTriple a = testing::random_triple(rng, 6), b = testing::random_triple(rng, 6);
    if (a.degenerate() || b.degenerate()) continue;
    auto key = [](const AngleTriple& t) {
      std::array<PiRational, 3> k{t.alpha().abs(), t.beta().abs(), t.gamma().abs()};
      std::sort(k.begin(), k.end());
      return k;
    };
    CHECK(similar(rho(a), rho(b)) == (key(a) == key(b)));
  }
}

TEST_CASE("orientation-preserving subgroup") {
  const auto sub = orientation_preserving_subgroup();
  REQUIRE(sub.size() == 6);
  CHECK(std::find(sub.begin(), sub.end(), el(Sign::Plus, Perm::c123)) != sub.end());
  CHECK(std::find(sub.begin(), sub.end(), el(Sign::Minus, Perm::e)) == sub.end());
  // it is <r^2, s>
  std::set<std::pair<int, bool>> words;
  for (const auto& g : sub) words.insert({to_word(g).r_power, to_word(g).s_flag});
  CHECK(words == std::set<std::pair<int, bool>>{{0, false}, {2, false}, {4, false}, {0, true}, {2, true}, {4, true}});
  for (const auto& g : sub)
    for (const auto& h : sub) CHECK(std::find(sub.begin(), sub.end(), compose(g, h)) != sub.end());
  for (const auto& g : sub) CHECK(orientation(act(g, point(1, 5, 4, 5))) == OrientationSign::Positive);
  for (const auto& g : all_elements()) {
    const bool inside = std::find(sub.begin(), sub.end(), g) != sub.end();
    CHECK((orientation(act(g, point(1, 5, 4, 5))) == OrientationSign::Positive) == inside);
  }
}

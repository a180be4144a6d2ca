#pragma once

#include <array>
#include <string>
#include <vector>

#include "tot/torus.hpp"

namespace tot {

enum class Sign { Plus, Minus };
enum class Perm { e, c123, c132, t12, t13, t23 };

using Mat2 = std::array<std::array<int, 2>, 2>;

/// Signed permutation +-sigma in +-S3, the relabeling group acting on T.
///
/// sigma permutes the vertex labels; the minus sign reverses orientation
/// (complex conjugation on the circle).
struct GroupElement {
  Sign sign = Sign::Plus;
  Perm perm = Perm::e;

  std::string str() const;
  bool operator==(const GroupElement&) const = default;
};

/// Normal form r^a s^b of an element of D6, r = -(123), s = -(12).
struct D6Word {
  int r_power = 0;  // 0..5
  bool s_flag = false;

  std::string str() const;
  bool operator==(const D6Word&) const = default;
};

/// The 12 elements: +e, +(123), +(132), +(12), +(13), +(23), then the same
/// permutations with sign minus.
const std::array<GroupElement, 12>& all_elements();

/// Integer matrix of g acting on relative arguments (xi1, xi2).
Mat2 matrix_of(const GroupElement& g);

Mat2 operator*(const Mat2& x, const Mat2& y);

/// Product g*h, defined so that act(g*h, p) = act(g, act(h, p)).
GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

D6Word to_word(const GroupElement& g);
GroupElement from_word(const D6Word& w);
/// r^a s^b evaluated with the matrices of r and s.
Mat2 word_matrix(const D6Word& w);

TorusPoint act(const GroupElement& g, const TorusPoint& p);

/// Distinct images of p under the 12 elements, sorted.
std::vector<TorusPoint> orbit(const TorusPoint& p);

/// Elements fixing p.
std::vector<GroupElement> stabilizer(const TorusPoint& p);

/// Order of the stabilizer of p in D6.
int multiplicity(const TorusPoint& p);

/// Lexicographically least point of the orbit of p.
TorusPoint canonical_rep(const TorusPoint& p);

/// Same absolute similarity class (unlabeled, unoriented).
bool similar(const TorusPoint& p, const TorusPoint& q);

/// <r^2, s> = {e, (123), (132), -(12), -(13), -(23)}.
std::vector<GroupElement> orientation_preserving_subgroup();

}  // namespace tot

#include "tot/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace tot {

namespace {


Mat2 perm_matrix(Perm p) {
  switch (p) {
    case Perm::e: return {{{1, 0}, {0, 1}}};
    case Perm::c123: return {{{-1, 1}, {-1, 0}}};
    case Perm::c132: return {{{0, -1}, {1, -1}}};
    case Perm::t12: return {{{0, 1}, {1, 0}}};
    case Perm::t13: return {{{-1, 0}, {-1, 1}}};
    case Perm::t23: return {{{1, -1}, {0, -1}}};
  }
  return {};
}

Mat2 negate(Mat2 m) {
  for (auto& row : m)
    for (int& x : row) x = -x;
  return m;
}

const char* perm_name(Perm p) {
  switch (p) {
    case Perm::e: return "e";
    case Perm::c123: return "(123)";
    case Perm::c132: return "(132)";
    case Perm::t12: return "(12)";
    case Perm::t13: return "(13)";
    case Perm::t23: return "(23)";
  }
  return "?";
}

GroupElement element_with_matrix(const Mat2& m) {
  for (const auto& g : all_elements())
    if (matrix_of(g) == m) return g;
  throw std::logic_error("matrix outside the +-S3 representation");
}

// dictionary +-sigma -> r^a s^b
struct WordEntry {
  GroupElement g;
  D6Word w;
};

const std::array<WordEntry, 12>& dictionary() {
  static const std::array<WordEntry, 12> table{{
      {{Sign::Plus, Perm::e}, {0, false}},
      {{Sign::Minus, Perm::c123}, {1, false}},
      {{Sign::Plus, Perm::c132}, {2, false}},
      {{Sign::Minus, Perm::e}, {3, false}},
      {{Sign::Plus, Perm::c123}, {4, false}},
      {{Sign::Minus, Perm::c132}, {5, false}},
      {{Sign::Minus, Perm::t12}, {0, true}},
      {{Sign::Plus, Perm::t23}, {1, true}},
      {{Sign::Minus, Perm::t13}, {2, true}},
      {{Sign::Plus, Perm::t12}, {3, true}},
      {{Sign::Minus, Perm::t23}, {4, true}},
      {{Sign::Plus, Perm::t13}, {5, true}},
  }};
  return table;
}

}  // namespace

std::string GroupElement::str() const { return (sign == Sign::Plus ? "+" : "-") + std::string(perm_name(perm)); }

std::string D6Word::str() const {
  std::string out = r_power == 0 ? (s_flag ? "" : "e") : (r_power == 1 ? "r" : "r^" + std::to_string(r_power));
  if (s_flag) out += "s";
  return out;
}

const std::array<GroupElement, 12>& all_elements() {
  static const std::array<GroupElement, 12> elements = [] {
    std::array<GroupElement, 12> out;
    constexpr std::array<Perm, 6> order{Perm::e, Perm::c123, Perm::c132, Perm::t12, Perm::t13, Perm::t23};
    for (int i = 0; i < 6; ++i) {
      out[i] = {Sign::Plus, order[i]};
      out[i + 6] = {Sign::Minus, order[i]};
    }
    return out;
  }();
  return elements;
}

Mat2 matrix_of(const GroupElement& g) {
  Mat2 m = perm_matrix(g.perm);
  return g.sign == Sign::Plus ? m : negate(m);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return element_with_matrix(matrix_of(g) * matrix_of(h));
}

GroupElement inverse(const GroupElement& g) {
  for (const auto& h : all_elements())
    if (compose(g, h) == GroupElement{}) return h;
  throw std::logic_error("element without inverse");
}

D6Word to_word(const GroupElement& g) {
  for (const auto& entry : dictionary())
    if (entry.g == g) return entry.w;
  throw std::logic_error("element missing from the D6 dictionary");
}

GroupElement from_word(const D6Word& w) {
  const D6Word normal{((w.r_power % 6) + 6) % 6, w.s_flag};
  for (const auto& entry : dictionary())
    if (entry.w == normal) return entry.g;
  throw std::logic_error("word missing from the D6 dictionary");
}

Mat2 word_matrix(const D6Word& w) {
  const Mat2 r = matrix_of({Sign::Minus, Perm::c123});
  const Mat2 s = matrix_of({Sign::Minus, Perm::t12});
  Mat2 out{{{1, 0}, {0, 1}}};
  for (int i = 0; i < ((w.r_power % 6) + 6) % 6; ++i) out = out * r;
  if (w.s_flag) out = out * s;
  return out;
}

TorusPoint act(const GroupElement& g, const TorusPoint& p) {
  const Mat2 m = matrix_of(g);
  return TorusPoint(p.xi1() * m[0][0] + p.xi2() * m[0][1], p.xi1() * m[1][0] + p.xi2() * m[1][1]);
}

std::vector<TorusPoint> orbit(const TorusPoint& p) {
  std::vector<TorusPoint> out;
  out.reserve(12);
  for (const auto& g : all_elements()) out.push_back(act(g, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupElement> stabilizer(const TorusPoint& p) {
  std::vector<GroupElement> out;
  for (const auto& g : all_elements())
    if (act(g, p) == p) out.push_back(g);
  return out;
}

int multiplicity(const TorusPoint& p) { return 12 / static_cast<int>(orbit(p).size()); }

TorusPoint canonical_rep(const TorusPoint& p) { return orbit(p).front(); }

bool similar(const TorusPoint& p, const TorusPoint& q) { return canonical_rep(p) == canonical_rep(q); }

std::vector<GroupElement> orientation_preserving_subgroup() {
  return {{Sign::Plus, Perm::e},      {Sign::Plus, Perm::c123},  {Sign::Plus, Perm::c132},
          {Sign::Minus, Perm::t12},   {Sign::Minus, Perm::t13},  {Sign::Minus, Perm::t23}};
}

}  // namespace tot

#include "tot/angle_core.hpp"

#include <algorithm>

#include "tot/error.hpp"

namespace tot {

namespace {

const PiRational kPi{1};
const PiRational kHalfPi{1, 2};

constexpr std::array<Vertex, 3> kVertices{Vertex::A, Vertex::B, Vertex::C};

}  // namespace

std::string to_string(Sheet s) { return s == Sheet::Plus ? "plus" : "minus"; }

char to_char(Vertex v) { return "ABC"[static_cast<int>(v)]; }

std::string VertexSet::str() const {
  std::string out;
  for (Vertex v : kVertices) {
    if (!contains(v)) continue;
    if (!out.empty()) out += ',';
    out += to_char(v);
  }
  return out.empty() ? "none" : out;
}

int AngleTriple::zero_count() const {
  return static_cast<int>(std::count_if(angles_.begin(), angles_.end(), [](const auto& a) { return a.is_zero(); }));
}

AngleTriple AngleTriple::negated() const { return make_triple(-alpha(), -beta(), -gamma()); }

std::string AngleTriple::str() const { return "[" + alpha().str() + ", " + beta().str() + ", " + gamma().str() + "]"; }

AngleTriple make_triple(PiRational alpha, PiRational beta, PiRational gamma) {
  const PiRational sum = alpha + beta + gamma;
  Sheet sheet;
  if (sum == kPi) {
    sheet = Sheet::Plus;
  } else if (sum == -kPi) {
    sheet = Sheet::Minus;
  } else {
    throw Error(ErrorKind::SumNotPi, "angles sum to " + sum.str() + "*pi");
  }
  const PiRational lo = sheet == Sheet::Plus ? PiRational{} : -kPi;
  const PiRational hi = sheet == Sheet::Plus ? kPi : PiRational{};
  for (const auto& a : {alpha, beta, gamma}) {
    if (a < lo || a > hi)
      throw Error(ErrorKind::OutOfRange, "angle " + a.str() + "*pi outside the " + to_string(sheet) + " sheet");
  }
  return AngleTriple(alpha, beta, gamma, sheet);
}

TypeFlags taxonomy(const AngleTriple& t) {
  TypeFlags f;
  std::array<PiRational, 3> abs{t.alpha().abs(), t.beta().abs(), t.gamma().abs()};
  f.degenerate = t.degenerate();

  if (f.degenerate) {
    const int zeros = t.zero_count();
    if (zeros == 2) {
      f.equilateral = true;
      f.isosceles_vertices = VertexSet::all();
      return f;
    }
    // one zero angle: the other two are supplementary in absolute value
    for (int i = 0; i < 3; ++i) {
      if (abs[i].is_zero() && abs[(i + 1) % 3] == kHalfPi) {
        f.isosceles_vertices.insert(kVertices[i]);
        f.right_vertices.insert(kVertices[(i + 1) % 3]);
        f.right_vertices.insert(kVertices[(i + 2) % 3]);
      }
    }
    f.scalene = f.isosceles_vertices.empty();
    return f;
  }

  for (int i = 0; i < 3; ++i) {
    if (abs[(i + 1) % 3] == abs[(i + 2) % 3]) f.isosceles_vertices.insert(kVertices[i]);
    if (abs[i] == kHalfPi) f.right_vertices.insert(kVertices[i]);
  }
  f.equilateral = f.isosceles_vertices.size() == 3;
  f.scalene = f.isosceles_vertices.empty();
  const PiRational largest = *std::max_element(abs.begin(), abs.end());
  f.obtuse = largest > kHalfPi;
  f.acute = largest < kHalfPi;
  return f;
}

bool degenerate_similar(const AngleTriple& a, const AngleTriple& b) {
  if (!a.degenerate() || !b.degenerate())
    throw Error(ErrorKind::NotDegenerate, "degenerate similarity needs two degenerate triples");
  if (a.zero_count() == 2 || b.zero_count() == 2) return a.zero_count() == b.zero_count();
  if (a == b) return true;
  for (int i = 0; i < 3; ++i) {
    if (!a.angles()[i].is_zero() || !b.angles()[i].is_zero()) continue;
    // [0, x, y] ~ [0, -y, -x] (cyclically for the zero at vertex i)
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    return b.angles()[j] == -a.angles()[k] && b.angles()[k] == -a.angles()[j];
  }
  return false;
}

}  // namespace tot

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "tot/pi_rational.hpp"

namespace tot {

enum class Sheet { Plus, Minus };

enum class Vertex : std::uint8_t { A = 0, B = 1, C = 2 };

std::string to_string(Sheet s);
char to_char(Vertex v);

/// Subset of the labeled vertices {A, B, C}.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  static constexpr VertexSet all() { return VertexSet(0b111); }

  constexpr bool contains(Vertex v) const { return bits_ & bit(v); }
  constexpr void insert(Vertex v) { bits_ |= bit(v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
  constexpr std::uint8_t bits() const { return bits_; }

  /// "A,C" or "none".
  std::string str() const;

  constexpr bool operator==(const VertexSet&) const = default;

 private:
  constexpr explicit VertexSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(Vertex v) { return std::uint8_t(1u << static_cast<unsigned>(v)); }
  std::uint8_t bits_ = 0;
};

/// Interior angles of a labeled triangle on one of the two sheets.
///
/// Plus sheet: angles in [0, pi] summing to pi. Minus sheet: angles in
/// [-pi, 0] summing to -pi. Only make_triple constructs one.
class AngleTriple {
 public:
  const PiRational& alpha() const { return angles_[0]; }
  const PiRational& beta() const { return angles_[1]; }
  const PiRational& gamma() const { return angles_[2]; }
  const PiRational& at(Vertex v) const { return angles_[static_cast<int>(v)]; }
  const std::array<PiRational, 3>& angles() const { return angles_; }
  Sheet sheet() const { return sheet_; }

  bool degenerate() const { return alpha().is_zero() || beta().is_zero() || gamma().is_zero(); }
  int zero_count() const;

  /// The reflected triangle: all angles negated, other sheet.
  AngleTriple negated() const;

  std::string str() const;

  bool operator==(const AngleTriple&) const = default;

 private:
  friend AngleTriple make_triple(PiRational, PiRational, PiRational);
  AngleTriple(PiRational a, PiRational b, PiRational c, Sheet s) : angles_{a, b, c}, sheet_(s) {}

  std::array<PiRational, 3> angles_;
  Sheet sheet_;
};

/// Validates and builds a triple; the sheet follows from the sign of the sum.
/// Throws Error(SumNotPi) or Error(OutOfRange).
AngleTriple make_triple(PiRational alpha, PiRational beta, PiRational gamma);

struct TypeFlags {
  bool equilateral = false;
  VertexSet isosceles_vertices;  // apex vertices
  VertexSet right_vertices;
  bool scalene = false;
  bool degenerate = false;
  bool obtuse = false;
  bool acute = false;

  bool isosceles() const { return !isosceles_vertices.empty(); }
  bool right() const { return !right_vertices.empty(); }

  bool operator==(const TypeFlags&) const = default;
};

/// Triangle type of a labeled triple. Flags depend only on absolute angles.
///
/// The degenerate equilateral class (a permutation of (+-pi, 0, 0)) is not
/// flagged right; only the three degenerate isosceles classes with two
/// right angles are.
TypeFlags taxonomy(const AngleTriple& t);

/// Similarity of degenerate triples: both have two zero angles, or they share
/// the zero vertex and the other two angles are anti-transposed.
/// Throws Error(NotDegenerate) if either input is nondegenerate.
bool degenerate_similar(const AngleTriple& a, const AngleTriple& b);

}  // namespace tot

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace tot {

/// An exact rational multiple of pi: value = (num / den) * pi radians.
///
/// Stored in lowest terms with den >= 1; zero is 0/1. Arithmetic is exact and
/// uses 64-bit integers with 128-bit intermediates; a result that does not fit
/// throws Error(Overflow) instead of wrapping.
class PiRational {
 public:
  constexpr PiRational() = default;
  /// Integer multiple of pi.
  explicit PiRational(std::int64_t num) : num_(num), den_(1) {}
  PiRational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  PiRational operator-() const;
  PiRational operator+(const PiRational& o) const;
  PiRational operator-(const PiRational& o) const;
  PiRational operator*(std::int64_t k) const;
  PiRational& operator+=(const PiRational& o) { return *this = *this + o; }
  PiRational& operator-=(const PiRational& o) { return *this = *this - o; }

  PiRational half() const;
  PiRational twice() const { return *this * 2; }
  PiRational abs() const { return num_ < 0 ? -*this : *this; }

  /// Representative in [0, 2pi).
  PiRational mod_two_pi() const;

  /// Value in radians.
  double radians() const;

  /// "p/q", "p" when q == 1.
  std::string str() const;

  bool operator==(const PiRational&) const = default;
  std::strong_ordering operator<=>(const PiRational& o) const;

 private:
  friend struct PiRationalAccess;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const PiRational& r);

/// Parses "p/q" or "p" as (p/q)*pi. Throws Error(InvalidArgument) on malformed text.
PiRational parse_pi_rational(const std::string& text);

}  // namespace tot

template <>
struct std::hash<tot::PiRational> {
  std::size_t operator()(const tot::PiRational& r) const noexcept {
    auto h = std::hash<std::int64_t>{}(r.num());
    return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

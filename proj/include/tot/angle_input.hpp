#pragma once

#include <optional>
#include <string>

#include "tot/pi_rational.hpp"

namespace tot {

enum class AngleFormat { PiRationalText, Degrees, Radians };

/// Parses "pi-rational" | "degrees" | "radians".
std::optional<AngleFormat> parse_angle_format(const std::string& name);

/// An input angle: exact when rational, otherwise only a float.
struct AngleValue {
  std::optional<PiRational> exact;
  double radians = 0.0;
};

inline constexpr std::int64_t kMaxRationalizeDenominator = 360;
inline constexpr double kRationalizeTolerance = 1e-9;

/// Nearest p/q * pi with q <= 360 within 1e-9 rad, smallest q first.
std::optional<PiRational> rationalize(double radians);

/// "p/q" is exact in pi-rational mode; degree and radian text goes through
/// rationalize. Throws Error(InvalidArgument) on malformed text.
AngleValue parse_angle(const std::string& text, AngleFormat format);

/// "2/3·π", "π", "-π", "0".
std::string format_pi(const PiRational& r);

/// 12 significant digits.
std::string format_float(double x);

}  // namespace tot

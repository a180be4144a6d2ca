#include "tot/angle_input.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "tot/error.hpp"

namespace tot {

std::optional<AngleFormat> parse_angle_format(const std::string& name) {
  if (name == "pi-rational") return AngleFormat::PiRationalText;
  if (name == "degrees") return AngleFormat::Degrees;
  if (name == "radians") return AngleFormat::Radians;
  return std::nullopt;
}

std::optional<PiRational> rationalize(double radians) {
  if (!std::isfinite(radians)) return std::nullopt;
  const double units = radians / std::numbers::pi;
  for (std::int64_t q = 1; q <= kMaxRationalizeDenominator; ++q) {
    const double p = std::round(units * static_cast<double>(q));
    if (std::abs(p) > 9.0e15) return std::nullopt;
    if (std::abs(p / static_cast<double>(q) * std::numbers::pi - radians) <= kRationalizeTolerance)
      return PiRational(static_cast<std::int64_t>(p), q);
  }
  return std::nullopt;
}

AngleValue parse_angle(const std::string& text, AngleFormat format) {
  if (format == AngleFormat::PiRationalText) {
    AngleValue v;
    v.exact = parse_pi_rational(text);
    v.radians = v.exact->radians();
    return v;
  }
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(x))
    throw Error(ErrorKind::InvalidArgument, "not a number: '" + text + "'");
  AngleValue v;
  v.radians = format == AngleFormat::Degrees ? x * std::numbers::pi / 180.0 : x;
  v.exact = rationalize(v.radians);
  return v;
}

std::string format_pi(const PiRational& r) {
  if (r.is_zero()) return "0";
  if (r.den() == 1) {
    if (r.num() == 1) return "π";
    if (r.num() == -1) return "-π";
    return std::to_string(r.num()) + "·π";
  }
  return r.str() + "·π";
}

std::string format_float(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace tot

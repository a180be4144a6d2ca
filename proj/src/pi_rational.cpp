#include "tot/pi_rational.hpp"

#include <charconv>
#include <limits>
#include <numbers>
#include <ostream>

#include "tot/error.hpp"

namespace tot {

__extension__ using Wide = __int128;

namespace {

Wide gcd128(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

struct PiRationalAccess {
  static PiRational reduced(Wide num, Wide den);
};

namespace {
PiRational reduced(Wide num, Wide den) { return PiRationalAccess::reduced(num, den); }
}  // namespace

PiRational PiRationalAccess::reduced(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return PiRational{};
  Wide g = gcd128(num, den);
  num /= g;
  den /= g;
  if (!fits64(num) || !fits64(den)) throw Error(ErrorKind::Overflow, "rational multiple of pi exceeds 64 bits");
  PiRational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

PiRational::PiRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  *this = reduced(num, den);
}

PiRational PiRational::operator-() const { return reduced(-static_cast<Wide>(num_), den_); }

PiRational PiRational::operator+(const PiRational& o) const {
  if (den_ == o.den_) return reduced(static_cast<Wide>(num_) + o.num_, den_);
  return reduced(static_cast<Wide>(num_) * o.den_ + static_cast<Wide>(o.num_) * den_,
                 static_cast<Wide>(den_) * o.den_);
}

PiRational PiRational::operator-(const PiRational& o) const { return *this + (-o); }

PiRational PiRational::operator*(std::int64_t k) const { return reduced(static_cast<Wide>(num_) * k, den_); }

PiRational PiRational::half() const { return reduced(num_, static_cast<Wide>(den_) * 2); }

PiRational PiRational::mod_two_pi() const {
  // num/den mod 2  ->  (num mod 2den)/den
  Wide period = static_cast<Wide>(den_) * 2;
  Wide r = static_cast<Wide>(num_) % period;
  if (r < 0) r += period;
  return reduced(r, den_);
}

double PiRational::radians() const {
  return static_cast<double>(num_) / static_cast<double>(den_) * std::numbers::pi;
}

std::string PiRational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering PiRational::operator<=>(const PiRational& o) const {
  return static_cast<Wide>(num_) * o.den_ <=> static_cast<Wide>(o.num_) * den_;
}

std::ostream& operator<<(std::ostream& os, const PiRational& r) { return os << r.str(); }

PiRational parse_pi_rational(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw Error(ErrorKind::InvalidArgument, "not a rational multiple of pi: '" + text + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return PiRational(parse_int(text));
  std::int64_t den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
  return PiRational(parse_int(std::string_view(text).substr(0, slash)), den);
}

}  // namespace tot

#include "tot/error.hpp"

namespace tot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SumNotPi: return "SumNotPi";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::UnsupportedLocus: return "UnsupportedLocus";
    case ErrorKind::ZeroVelocity: return "ZeroVelocity";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tot

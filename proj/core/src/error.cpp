#include "avoidance/error.hpp"

#include <cstdlib>
#include <string>

#include "avoidance/limits.hpp"

namespace avoidance {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDescription: return "MalformedDescription";
    case ErrorKind::NonCommutative: return "NonCommutative";
    case ErrorKind::OneEqualsZero: return "OneEqualsZero";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::LatticeBound: return "LatticeBound";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::BoundViolation: return "BoundViolation";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::EngineBug: return "EngineBug";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::NotMaximal: return "NotMaximal";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorKind::LinearRelation: return "LinearRelation";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::ZeroIdealUnsupported: return "ZeroIdealUnsupported";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Limits Limits::from_environment() {
  Limits limits;
  if (const char* env = std::getenv("AVOIDANCE_MAX_RING_SIZE"); env != nullptr && *env != '\0') {
    try {
      std::size_t pos = 0;
      const auto value = std::stoull(env, &pos);
      if (pos != std::string(env).size() || value < 1) throw std::invalid_argument("trailing characters");
      limits.max_ring_size = value;
    } catch (const std::exception&) {
      fail(ErrorKind::MalformedDescription, std::string("AVOIDANCE_MAX_RING_SIZE is not a positive integer: ") + env);
    }
  }
  return limits;
}

}  // namespace avoidance

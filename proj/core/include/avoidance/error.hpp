#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avoidance {

enum class ErrorKind {
  MalformedDescription,
  NonCommutative,
  OneEqualsZero,
  ReducibleModulus,
  SizeBound,
  LatticeBound,
  ImproperIdeal,
  RingMismatch,
  NotACover,
  BoundViolation,
  HypothesisFailed,
  EngineBug,
  NotFaithful,
  NotMaximal,
  DimensionTooSmall,
  NonHomogeneousRelation,
  LinearRelation,
  NotAField,
  ZeroIdealUnsupported,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

/// Every engine failure is reported through this exception; `kind()` is the
/// machine-readable category and `what()` carries the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  /// Resource exhaustion (as opposed to bad input or a broken invariant).
  [[nodiscard]] bool is_resource_bound() const noexcept {
    return kind_ == ErrorKind::SizeBound || kind_ == ErrorKind::LatticeBound;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace avoidance

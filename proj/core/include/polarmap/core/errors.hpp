#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarmap {

enum class ErrorKind {
  ContractViolation,
  DomainError,
  SingularMetric,
  FrameContinuity,
  DegenerateSurface,
  InvalidSupportFunction,
  FrameError,
  ConstructionError,
  RegularityError,
  ConditioningError,
  SingularPoint,
  Unsupported,
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace polarmap

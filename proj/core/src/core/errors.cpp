#include "polarmap/core/errors.hpp"

namespace polarmap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContractViolation: return "contract violation";
    case ErrorKind::DomainError: return "domain error";
    case ErrorKind::SingularMetric: return "singular metric";
    case ErrorKind::FrameContinuity: return "frame continuity";
    case ErrorKind::DegenerateSurface: return "degenerate surface";
    case ErrorKind::InvalidSupportFunction: return "invalid support function";
    case ErrorKind::FrameError: return "frame error";
    case ErrorKind::ConstructionError: return "construction error";
    case ErrorKind::RegularityError: return "regularity error";
    case ErrorKind::ConditioningError: return "conditioning error";
    case ErrorKind::SingularPoint: return "singular point";
    case ErrorKind::Unsupported: return "unsupported";
  }
  return "error";
}

}  // namespace polarmap

#include "knotchar/error.hpp"

namespace knotchar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidComponent: return "InvalidComponent";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::EigenvalueNotRootOfUnity: return "EigenvalueNotRootOfUnity";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace knotchar

#include "specalc/errors.hpp"

namespace specalc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::invalid_profile: return "invalid_profile";
    case ErrorCode::not_finitely_representable: return "not_finitely_representable";
    case ErrorCode::collision_depth_exceeded: return "collision_depth_exceeded";
    case ErrorCode::empty_factorization: return "empty_factorization";
    case ErrorCode::size_overflow: return "size_overflow";
    case ErrorCode::non_square: return "non_square";
    case ErrorCode::not_triangular: return "not_triangular";
    case ErrorCode::verification_failed: return "verification_failed";
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::validation_error: return "validation_error";
  }
  return "unknown";
}

}  // namespace specalc

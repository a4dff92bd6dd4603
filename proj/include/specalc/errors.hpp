#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace specalc {

enum class ErrorCode {
  division_by_zero,
  invalid_profile,
  not_finitely_representable,
  collision_depth_exceeded,
  empty_factorization,
  size_overflow,
  non_square,
  not_triangular,
  verification_failed,
  syntax_error,
  validation_error,
};

std::string_view to_string(ErrorCode code);

// Base of every domain error raised by the library. The code is what the CLI
// reports under --json.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::syntax_error, what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace specalc

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dynorb {

enum class ErrorKind {
  BothZero,
  DegenerateMap,
  DegreeDrop,
  SizeBudgetExceeded,
  ParseError,
  NotRational,
  DegenerateFamily,
  Precondition,
  InvalidInput,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind so the
// CLI can emit it as JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dynorb

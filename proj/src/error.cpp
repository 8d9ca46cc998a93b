#include "dynorb/error.hpp"

namespace dynorb {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::DegreeDrop: return "DegreeDrop";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace dynorb

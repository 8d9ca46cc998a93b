#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dynorb/family_spec.hpp"
#include "dynorb/mpoly.hpp"
#include "dynorb/rational_map.hpp"

namespace dynorb {

// num / den with integer polynomial numerator and denominator in x, t, r, s,
// f. No polynomial gcd is taken; integer content is removed and the leading
// term of den is positive.
struct RationalExpr {
  MPoly num;
  MPoly den{1};
  friend bool operator==(const RationalExpr&, const RationalExpr&) = default;
};

// Grammar: integers, symbols x t r s f, + - * / ^ (integer exponents, may be
// negative), parentheses. Throws ParseError(ParseError) with a position, or
// ParseError(NotRational) when an exponent is not an integer constant.
RationalExpr parse_expression(std::string_view text);

// Builds the family; d = max x-degree of num, den (must be >= 1).
FamilySpec family_from_expression(const RationalExpr& e);
FamilySpec parse_family(std::string_view text);

// Also accepts the presets "phi_t", "pell(D)", "three_param".
FamilySpec parse_map_or_preset(std::string_view text);

// Arity-0 families only; Error(InvalidInput) otherwise.
RationalMap to_map(const FamilySpec& family);

BasepointSpec parse_basepoint(std::string_view text);

std::string format_expression(const RationalExpr& e);
std::string format_family(const FamilySpec& family);
std::string format_map(const RationalMap& map);
std::string format_basepoint(const BasepointSpec& b);

// Declarative family file:
//   params = t        (comma separated, may be empty)
//   d = 3
//   num = -t, 1, 0, 0 (coefficients of x^0 .. x^d)
//   den = 1, 0, 0, 1
//   beta = t^3+2      (optional)
// '#' starts a comment.
struct FamilyFile {
  FamilySpec family;
  std::optional<BasepointSpec> beta;
};
FamilyFile parse_family_file(std::string_view text);
std::string format_family_file(const FamilyFile& file);

}  // namespace dynorb

#pragma once

#include <string>
#include <vector>

#include "dynorb/mpoly.hpp"

namespace dynorb {

// A map of degree d in x whose coefficients are integer polynomials in the
// parameters; num[k], den[k] multiply x^k. Arity 0 is a single map over Q.
struct FamilySpec {
  std::vector<Var> params;  // in the order r, s, t, f
  int d = 0;
  std::vector<MPoly> num;
  std::vector<MPoly> den;

  std::size_t arity() const { return params.size(); }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// A rational function of the parameters (no x), e.g. t^3+2 or r^6*s^6*t^6.
struct BasepointSpec {
  MPoly num;
  MPoly den{1};

  bool is_constant() const { return num.is_constant() && den.is_constant(); }
  int degree() const;  // max total degree of num, den in the parameters
  friend bool operator==(const BasepointSpec&, const BasepointSpec&) = default;
};

}  // namespace dynorb

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dynorb/algebra.hpp"
#include "dynorb/integer.hpp"
#include "dynorb/point.hpp"

namespace dynorb {

// Coefficient of X^i Y^(d-i) at index i; length is d + 1.
struct BinaryForm {
  std::vector<Int> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int operator()(const Int& x, const Int& y) const { return alg::eval_form(coeffs, x, y); }
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

inline constexpr std::size_t kDefaultCoeffBudgetBits = 1'000'000;

// A degree-d self-map [F : G] of P^1 over Q with Res(F, G) != 0, coprime
// integer coefficients, and the first nonzero coefficient (numerator first,
// highest power of X first) positive.
class RationalMap {
 public:
  const BinaryForm& numerator() const { return num_; }
  const BinaryForm& denominator() const { return den_; }
  int degree() const { return num_.degree(); }
  // Res(F, G) of the canonical forms.
  const Int& resultant() const { return res_; }

  friend bool operator==(const RationalMap& x, const RationalMap& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  friend RationalMap make_map(std::vector<Int> num_coeffs, std::vector<Int> den_coeffs);
  friend RationalMap compose(const RationalMap& outer, const RationalMap& inner,
                             std::size_t budget_bits);

 private:
  RationalMap(BinaryForm num, BinaryForm den, Int res)
      : num_(std::move(num)), den_(std::move(den)), res_(std::move(res)) {}

  BinaryForm num_;
  BinaryForm den_;
  Int res_;
};

// Content-reduces and sign-canonicalizes; throws DegreeDrop when both X^d
// coefficients vanish and DegenerateMap when Res(F, G) = 0.
RationalMap make_map(std::vector<Int> num_coeffs, std::vector<Int> den_coeffs);

// Sylvester resultant of two forms, padded to a common degree.
Int resultant(const BinaryForm& f, const BinaryForm& g);

// p1*F + q1*G = R*X^D and p2*F + q2*G = R*Y^D as integer form identities.
struct CofactorCertificate {
  BinaryForm p1, q1, p2, q2;
  Int R;
  int exponent = 0;  // D = 2d - 1
};

CofactorCertificate cofactors(const RationalMap& map);

// Re-checks both identities coefficient by coefficient.
bool verify_certificate(const RationalMap& map, const CofactorCertificate& cert);

ProjPoint evaluate(const RationalMap& map, const ProjPoint& p);

RationalMap compose(const RationalMap& outer, const RationalMap& inner,
                    std::size_t budget_bits = kDefaultCoeffBudgetBits);
RationalMap iterate(const RationalMap& map, unsigned n,
                    std::size_t budget_bits = kDefaultCoeffBudgetBits);

// Denominator form is c * Y^d, so the map lies in Q[x] in these coordinates.
bool is_polynomial(const RationalMap& map);
bool second_iterate_is_polynomial(const RationalMap& map);

HeightValue map_height(const RationalMap& map);

// "[a_0,...,a_d | b_0,...,b_d]"
std::string format_coefficients(const RationalMap& map);
RationalMap parse_coefficients(std::string_view text);

}  // namespace dynorb

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dynorb/algebra.hpp"
#include "dynorb/integer.hpp"

namespace dynorb {

// Variables available to symbolic expressions: the map variable x and the
// parameter symbols t, r, s, f.
enum class Var : int { X = 0, T = 1, R = 2, S = 3, F = 4 };
inline constexpr int kNumVars = 5;
inline constexpr std::array<char, kNumVars> kVarNames{'x', 't', 'r', 's', 'f'};

using Monomial = std::uint64_t;  // 12 bits per exponent, x in the top field

inline constexpr int kExpBits = 12;
inline constexpr std::uint64_t kExpMask = (1u << kExpBits) - 1;
inline constexpr int kMaxExponent = static_cast<int>(kExpMask);

inline int var_shift(Var v) { return kExpBits * (kNumVars - 1 - static_cast<int>(v)); }
inline int exponent_of(Monomial m, Var v) {
  return static_cast<int>((m >> var_shift(v)) & kExpMask);
}
Monomial make_monomial(std::initializer_list<std::pair<Var, int>> powers);

// Sparse multivariate polynomial over Z. Terms are sorted by monomial (lex,
// x > t > r > s > f) and carry nonzero coefficients.
class MPoly {
 public:
  using Term = std::pair<Monomial, Int>;

  MPoly() = default;
  MPoly(long c) : MPoly(Int(c)) {}  // NOLINT: implicit on purpose, like Int
  MPoly(const Int& c);              // NOLINT
  static MPoly var(Var v, int power = 1);
  static MPoly term(Monomial m, Int c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  Int constant_value() const;  // coefficient of the empty monomial

  int degree_in(Var v) const;  // -1 for zero
  bool uses(Var v) const { return degree_in(v) > 0; }
  // Coefficient of x^k, as a polynomial free of x.
  MPoly coefficient_of_x(int k) const;
  MPoly derivative(Var v) const;
  Int content() const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend bool operator==(const MPoly&, const MPoly&) = default;

  MPoly pow(unsigned e) const;
  MPoly scaled(const Int& c) const;
  // Exact quotient; throws Error(InvalidInput) when b does not divide a.
  static MPoly exact_div(const MPoly& a, const MPoly& b);
  bool divides(const MPoly& a) const;

  // Values indexed by Var; unused variables may be anything.
  Rational evaluate(const std::array<Rational, kNumVars>& values) const;
  Int evaluate_int(const std::array<Int, kNumVars>& values) const;
  // Substitutes v := value, keeping the other variables symbolic.
  MPoly substitute(Var v, const Int& value) const;

  // Human-readable form, e.g. "-t*x^9+x^7-4*t*x^6".
  std::string to_string() const;

 private:
  void normalize_terms();
  std::vector<Term> terms_;
};

template <>
struct RingOps<MPoly> {
  static MPoly zero(const MPoly&) { return MPoly(); }
  static MPoly one(const MPoly&) { return MPoly(1); }
  static MPoly from_int(const MPoly&, long v) { return MPoly(v); }
  static bool is_zero(const MPoly& x) { return x.is_zero(); }
  static MPoly exact_div(const MPoly& a, const MPoly& b) { return MPoly::exact_div(a, b); }
};

// Univariate-in-x view: index k holds the coefficient of x^k.
std::vector<MPoly> split_by_x(const MPoly& p, int degree);
MPoly join_by_x(const std::vector<MPoly>& coeffs);

}  // namespace dynorb

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynorb/algebra.hpp"
#include "dynorb/families.hpp"
#include "dynorb/orbit.hpp"
#include "dynorb/verification.hpp"

namespace dynorb {

inline constexpr int kMaxFieldPrime = 97;

// Element of F_p[t]; coeffs[i] multiplies t^i, no trailing zeros.
class FFPoly {
 public:
  FFPoly() = default;  // p = 0: placeholder only, must be assigned before use
  FFPoly(int p, long constant);
  FFPoly(int p, std::vector<int> coeffs);
  static FFPoly t(int p, int power = 1);
  static FFPoly from_mpoly(int p, const MPoly& m);  // m may only use t

  int p() const { return p_; }
  const std::vector<int>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int lead() const { return c_.empty() ? 0 : c_.back(); }
  int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  FFPoly monic() const;

  friend FFPoly operator+(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
  friend FFPoly operator-(const FFPoly& a);
  friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
  friend bool operator==(const FFPoly&, const FFPoly&) = default;
  FFPoly pow(unsigned e) const;
  FFPoly scaled(int c) const;

  // a = q b + r with deg r < deg b.
  static std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
  static FFPoly exact_div(const FFPoly& a, const FFPoly& b);  // Error(InvalidInput) if inexact
  static FFPoly gcd(FFPoly a, FFPoly b);  // monic, or zero
  int value_at(int x) const;
  bool is_irreducible() const;

  // "1+2*t+t^2", "0".
  std::string to_string() const;
  static FFPoly parse(int p, std::string_view text);

 private:
  void trim();
  int p_ = 0;
  std::vector<int> c_;
};

int inverse_mod(int a, int p);

template <>
struct RingOps<FFPoly> {
  static FFPoly zero(const FFPoly& like) { return FFPoly(like.p(), 0L); }
  static FFPoly one(const FFPoly& like) { return FFPoly(like.p(), 1L); }
  static FFPoly from_int(const FFPoly& like, long v) { return FFPoly(like.p(), v); }
  static bool is_zero(const FFPoly& x) { return x.is_zero(); }
  static FFPoly exact_div(const FFPoly& a, const FFPoly& b) { return FFPoly::exact_div(a, b); }
};

// Element num/den of F_p(t): coprime, den monic.
class FFRat {
 public:
  FFRat() = default;
  FFRat(FFPoly num);
  FFRat(FFPoly num, FFPoly den);  // Error(InvalidInput) on zero den
  const FFPoly& num() const { return num_; }
  const FFPoly& den() const { return den_; }
  int p() const { return num_.p(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  int height() const { return std::max(num_.degree(), den_.degree()); }  // h(f), 0 for constants

  friend FFRat operator+(const FFRat& a, const FFRat& b);
  friend FFRat operator-(const FFRat& a, const FFRat& b);
  friend FFRat operator-(const FFRat& a);
  friend FFRat operator*(const FFRat& a, const FFRat& b);
  friend FFRat operator/(const FFRat& a, const FFRat& b);
  friend bool operator==(const FFRat&, const FFRat&) = default;
  FFRat pow(unsigned e) const;

  std::string to_string() const;  // "t", "1/t", "(1+t)/(t^2+1)"
  static FFRat parse(int p, std::string_view text);  // expression in t

 private:
  FFPoly num_, den_;
};

template <>
struct RingOps<FFRat> {
  static FFRat zero(const FFRat& like) { return FFRat(FFPoly(like.p(), 0L)); }
  static FFRat one(const FFRat& like) { return FFRat(FFPoly(like.p(), 1L)); }
  static FFRat from_int(const FFRat& like, long v) { return FFRat(FFPoly(like.p(), v)); }
  static bool is_zero(const FFRat& x) { return x.is_zero(); }
  static FFRat exact_div(const FFRat& a, const FFRat& b) { return a / b; }
};

// [z0 : z1] with z0, z1 in F_p[t], coprime; z1 monic, or z1 = 0 and z0 = 1.
class FFPoint {
 public:
  static FFPoint make(FFPoly z0, FFPoly z1);  // normalizes; Error(BothZero)
  static FFPoint from(const FFRat& f) { return make(f.num(), f.den()); }
  static FFPoint infinity(int p) { return make(FFPoly(p, 1L), FFPoly(p, 0L)); }
  const FFPoly& z0() const { return z0_; }
  const FFPoly& z1() const { return z1_; }
  bool is_infinity() const { return z1_.is_zero(); }
  friend bool operator==(const FFPoint&, const FFPoint&) = default;
  std::string to_string() const;

 private:
  FFPoly z0_, z1_;
};

struct FFPointHash {
  std::size_t operator()(const FFPoint& p) const;
};

int ff_height(const FFPoint& p);  // max(deg z0, deg z1)

// S: monic irreducible polynomials; the infinite place is implicit.
bool ff_is_s_integral(const FFPoint& p, const std::vector<FFPoly>& s);
// Validates and normalizes a place list (Error(InvalidInput) on reducible or
// repeated entries).
std::vector<FFPoly> ff_places(int p, const std::vector<FFPoly>& s);

// Binary forms over F_p[t] with coprime coefficient content and nonzero
// resultant.
class FFMap {
 public:
  FFMap(std::vector<FFPoly> num, std::vector<FFPoly> den);  // DegenerateMap / DegreeDrop
  int p() const { return num_[0].p(); }
  int degree() const { return static_cast<int>(num_.size()) - 1; }
  const std::vector<FFPoly>& numerator() const { return num_; }
  const std::vector<FFPoly>& denominator() const { return den_; }
  const FFPoly& resultant() const { return res_; }
  int height() const;  // max coefficient degree
  FFPoint operator()(const FFPoint& p) const;
  friend bool operator==(const FFMap& a, const FFMap& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  std::vector<FFPoly> num_, den_;
  FFPoly res_;
};

FFMap ff_compose(const FFMap& outer, const FFMap& inner);

// h(phi P) in [d h(P) - c_low, d h(P) + c_up].
struct FFTransition {
  int c_up = 0;   // h(phi)
  int c_low = 0;  // max cofactor degree
};
FFTransition ff_transition_constants(const FFMap& map);

// (f+1) x^d / (x^(d-1) + f). DegenerateFamily for f = -1 and f = 0 (where the
// map collapses to x).
FFMap ff_family(int d, const FFRat& f);

struct FFFamilyChecks {
  FFMap map;
  VerificationReport report;
  bool isotrivial = false;
  FFRat second_iterate_scalar;  // composed = scalar * displayed
};
FFFamilyChecks ff_family_checks(int d, const FFRat& f);

// Symbolic derivative identity over Z[x, f] for the given degree.
VerificationReport ff_derivative_identity(int d);

struct FFOrbitPolicy {
  unsigned n_cap = 16;
  int degree_budget = 512;
};

struct FFOrbitRecord {
  std::vector<FFPoint> points;
  std::vector<std::size_t> integral_indices;
  std::optional<CycleEntry> cycle;
  Truncation truncation = Truncation::IterationCap;
};
FFOrbitRecord ff_scan_orbit(const FFMap& map, const FFPoint& b, const std::vector<FFPoly>& s,
                            const FFOrbitPolicy& policy = {});

// Non-constant f = a/b (coprime, b monic) with max(deg a, deg b) <= bound.
std::vector<FFRat> ff_enumerate(int p, int bound);

// beta: polynomial expression in f (MPoly in Var::F); deg beta must exceed
// (2d-1)/(d-1) (Error(Precondition)).
AvgReport ff_orbit_avg(int p, int d, const MPoly& beta, const std::vector<FFPoly>& s,
                       const std::vector<long>& b_values, const FFOrbitPolicy& policy = {},
                       unsigned workers = 1);

// All points of P^1(F_p(t)) with height <= bound (for height checks).
std::vector<FFPoint> ff_enumerate_points(int p, int bound);

// d h(P) - c_low <= h(phi(f) P) <= d h(P) + c_up for every P with h(P) <= bound.
VerificationReport ff_height_bound_check(int d, const FFRat& f, int bound);

}  // namespace dynorb

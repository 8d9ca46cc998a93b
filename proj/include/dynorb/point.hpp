#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dynorb/integer.hpp"

namespace dynorb {

// A point [a : b] of P^1(Q) with gcd(|a|, |b|) = 1 and either b > 0 or
// (a, b) = (1, 0). Construct through normalize().
class ProjPoint {
 public:
  ProjPoint() : a_(0), b_(1) {}

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  bool is_infinity() const { return b_ == 0; }

  static ProjPoint infinity() { return ProjPoint(Int(1), Int(0)); }
  static ProjPoint integer(const Int& n) { return ProjPoint(n, Int(1)); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  friend ProjPoint normalize(Int a, Int b);
  friend ProjPoint normalize_coprime(Int a, Int b);

 private:
  ProjPoint(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {}

  Int a_;
  Int b_;
};

// Unique normalized representative of [a : b]; throws Error(BothZero).
ProjPoint normalize(Int a, Int b);
// Same, for a pair already known to be coprime (only the sign is fixed).
ProjPoint normalize_coprime(Int a, Int b);

struct HeightValue {
  Int mult;       // H = max(|a|, |b|)
  double log = 0;  // h = ln H
};

// Multiplicative and logarithmic Weil height.
HeightValue weil_height(const ProjPoint& p);

inline Int height_mult(const ProjPoint& p) {
  return std::max(abs_int(p.a()), p.b());
}

// Total order used by enumeration: by H, then numerator, then denominator.
std::strong_ordering height_order(const ProjPoint& x, const ProjPoint& y);

struct PointHash {
  std::size_t operator()(const ProjPoint& p) const;
};

// A finite set of rational primes. The archimedean place is implicit; the
// empty set means O_S = Z.
class SIntSpec {
 public:
  SIntSpec() = default;
  // Throws Error(InvalidInput) on a non-prime or repeated entry.
  explicit SIntSpec(std::vector<Int> primes);

  const std::vector<Int>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }

  // Removes every factor of a prime in S from n.
  Int strip(Int n) const;
  bool is_unit_part(const Int& n) const { return abs_int(strip(n)) == 1; }

  // Parses "2,3,5"; the empty string yields S = {}.
  static SIntSpec parse(std::string_view text);
  std::string to_string() const;

 private:
  std::vector<Int> primes_;
};

// True iff p is finite and its denominator has only prime factors in S. The
// point at infinity is never S-integral.
bool is_s_integral(const ProjPoint& p, const SIntSpec& s);

// Every point of height <= bound, ordered by height_order. Work is split
// across `workers` threads; the output does not depend on the split.
std::vector<ProjPoint> enumerate_points(const Int& bound, unsigned workers = 1);

// |{P in P^1(Q) : H(P) <= bound}| without materializing the points.
Int count_points(long bound);

// "a/b", "n" for integers, "inf" for [1:0].
std::string format_point(const ProjPoint& p);
ProjPoint parse_point(std::string_view text);

}  // namespace dynorb

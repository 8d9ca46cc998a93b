#include <random>

#include "doctest.h"
#include "dynorb/error.hpp"
#include "dynorb/rational_map.hpp"

using namespace dynorb;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Resultant of univariate polynomials through the Euclidean remainder
// sequence over Q; independent of the Sylvester/Bareiss route.
Rational euclid_resultant(std::vector<Rational> f, std::vector<Rational> g) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return 0;
  const long m = static_cast<long>(f.size()) - 1;
  const long n = static_cast<long>(g.size()) - 1;
  if (n == 0) {
    Rational r = 1;
    for (long i = 0; i < m; ++i) r *= g[0];
    return r;
  }
  if (m < n) {
    Rational r = euclid_resultant(g, f);
    return (m * n) % 2 ? Rational(-r) : r;
  }
  std::vector<Rational> rem = f;
  for (long k = m - n; k >= 0; --k) {
    Rational q = rem[k + n] / g[n];
    for (long i = 0; i <= n; ++i) rem[k + i] -= q * g[i];
  }
  rem.resize(n);
  trim(rem);
  if (rem.empty()) return 0;
  const long r = static_cast<long>(rem.size()) - 1;
  Rational lc_pow = 1;
  for (long i = 0; i < m - r; ++i) lc_pow *= g[n];
  Rational sign = (m * n) % 2 ? -1 : 1;
  return sign * lc_pow * euclid_resultant(g, rem);
}

std::vector<Rational> to_q(const std::vector<Int>& v) {
  std::vector<Rational> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

RationalMap random_map(std::mt19937_64& rng, int d, long range) {
  std::uniform_int_distribution<long> coeff(-range, range);
  for (;;) {
    std::vector<Int> num, den;
    for (int i = 0; i <= d; ++i) {
      num.emplace_back(coeff(rng));
      den.emplace_back(coeff(rng));
    }
    try {
      return make_map(num, den);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("make_map examples") {
  auto sq = make_map(ints({0, 0, 1}), ints({1, 0, 0}));
  CHECK(sq.degree() == 2);
  CHECK(sq.resultant() == 1);
  // (x - 1)/(x^3 + 1) as [X Y^2 - Y^3, X^3 + Y^3]
  auto phi1 = make_map(ints({-1, 1, 0, 0}), ints({1, 0, 0, 1}));
  CHECK(phi1.degree() == 3);
  CHECK(phi1.resultant() != 0);
  try {
    make_map(ints({0, 0, 1}), ints({0, 1, 0}));
    FAIL("expected DegenerateMap");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMap);
  }
  try {
    make_map(ints({0, 1, 0}), ints({1, 1, 0}));
    FAIL("expected DegreeDrop");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegreeDrop);
  }
}

TEST_CASE("make_map canonical form is scale invariant") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    auto m = random_map(rng, 2 + i % 3, 6);
    for (long k : {-3L, 2L, 7L}) {
      std::vector<Int> num, den;
      for (const auto& c : m.numerator().coeffs) num.push_back(c * k);
      for (const auto& c : m.denominator().coeffs) den.push_back(c * k);
      auto scaled = make_map(num, den);
      CHECK(scaled == m);
      CHECK(scaled.resultant() == m.resultant());
    }
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(BinaryForm{ints({0, 0, 1})}, BinaryForm{ints({1, 0, 0})}) == 1);
  CHECK(resultant(BinaryForm{ints({-2, 0, 1})}, BinaryForm{ints({-2, 0, 1})}) == 0);
  auto phi1 = make_map(ints({-1, 1, 0, 0}), ints({1, 0, 0, 1}));
  auto second = iterate(phi1, 2);
  CHECK(second.degree() == 9);
  CHECK(resultant(second.numerator(), second.denominator()) == 4096);
  CHECK(second.resultant() == 4096);
}

TEST_CASE("sylvester resultant agrees with euclidean oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 5;
    std::vector<Int> f, g;
    for (int i = 0; i <= d; ++i) {
      f.emplace_back(coeff(rng));
      g.emplace_back(coeff(rng));
    }
    if (f.back() == 0) f.back() = 1;
    if (g.back() == 0) g.back() = -1;
    const Int syl = resultant(BinaryForm{f}, BinaryForm{g});
    CHECK(Rational(syl) == euclid_resultant(to_q(f), to_q(g)));
  }
}

TEST_CASE("composition resultant formula matches sylvester") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_map(rng, 2 + trial % 2, 4);
    auto b = random_map(rng, 2, 4);
    auto c = compose(a, b);
    CHECK(c.degree() == a.degree() * b.degree());
    CHECK(c.resultant() == resultant(c.numerator(), c.denominator()));
  }
}

TEST_CASE("cofactor certificates") {
  auto sq = make_map(ints({0, 0, 1}), ints({1, 0, 0}));
  auto cert = cofactors(sq);
  CHECK(cert.exponent == 3);
  CHECK(verify_certificate(sq, cert));

  auto phi1 = make_map(ints({-1, 1, 0, 0}), ints({1, 0, 0, 1}));
  CHECK(verify_certificate(phi1, cofactors(phi1)));

  // x^4/(x^2-2)^2 = [X^4, X^4 - 4 X^2 Y^2 + 4 Y^4]
  auto pell = make_map(ints({0, 0, 0, 0, 1}), ints({4, 0, -4, 0, 1}));
  auto pc = cofactors(pell);
  CHECK(verify_certificate(pell, pc));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-1000, 1000);
  int checked = 0;
  while (checked < 100) {
    long a = coord(rng), b = coord(rng);
    if (std::gcd(std::labs(a), std::labs(b)) != 1) continue;
    ++checked;
    Int g = gcd_int(pell.numerator()(a, b), pell.denominator()(a, b));
    CHECK(divides(g, pc.R));
  }
  // A tampered certificate is rejected.
  pc.p1.coeffs[0] += 1;
  CHECK_FALSE(verify_certificate(pell, pc));
}

TEST_CASE("gcd of evaluated forms divides R on a box") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 4; ++trial) {
    auto m = random_map(rng, 2 + trial % 3, 5);
    auto cert = cofactors(m);
    for (long a = -50; a <= 50; ++a)
      for (long b = -50; b <= 50; ++b) {
        if (std::gcd(std::labs(a), std::labs(b)) != 1) continue;
        Int g = gcd_int(m.numerator()(a, b), m.denominator()(a, b));
        REQUIRE(divides(g, cert.R));
      }
  }
}

TEST_CASE("evaluate examples") {
  auto pell = make_map(ints({0, 0, 0, 0, 1}), ints({4, 0, -4, 0, 1}));
  CHECK(evaluate(pell, normalize(3, 2)) == normalize(81, 1));
  auto sq = make_map(ints({0, 0, 1}), ints({1, 0, 0}));
  CHECK(evaluate(sq, ProjPoint::infinity()).is_infinity());
  auto phi1 = make_map(ints({-1, 1, 0, 0}), ints({1, 0, 0, 1}));
  CHECK(evaluate(phi1, normalize(1, 1)) == normalize(0, 1));
}

TEST_CASE("iterate and evaluate commute") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coord(-30, 30);
  for (int d = 2; d <= 4; ++d) {
    auto m = random_map(rng, d, 5);
    auto m2 = iterate(m, 2);
    CHECK(m2.degree() == d * d);
    for (int i = 0; i < 100; ++i) {
      long a = coord(rng), b = coord(rng);
      if (a == 0 && b == 0) continue;
      auto p = normalize(a, b);
      CHECK(evaluate(m2, p) == evaluate(m, evaluate(m, p)));
    }
  }
  auto sq = make_map(ints({0, 0, 1}), ints({1, 0, 0}));
  auto sq2 = iterate(sq, 2);
  CHECK(sq2 == make_map(ints({0, 0, 0, 0, 1}), ints({1, 0, 0, 0, 0})));
  for (int d = 2; d <= 3; ++d)
    CHECK(iterate(random_map(rng, d, 3), 3).degree() == d * d * d);
}

TEST_CASE("size budget") {
  auto m = make_map(ints({3, 5, 7}), ints({1, 0, 2}));
  CHECK_THROWS_AS(iterate(m, 6, 64), Error);
  try {
    iterate(m, 6, 64);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeBudgetExceeded);
  }
}

TEST_CASE("polynomial detection") {
  auto sq = make_map(ints({0, 0, 1}), ints({1, 0, 0}));
  CHECK(is_polynomial(sq));
  CHECK(second_iterate_is_polynomial(sq));
  auto inv_sq = make_map(ints({1, 0, 0}), ints({0, 0, 1}));
  CHECK_FALSE(is_polynomial(inv_sq));
  CHECK(second_iterate_is_polynomial(inv_sq));
  auto phi1 = make_map(ints({-1, 1, 0, 0}), ints({1, 0, 0, 1}));
  CHECK_FALSE(second_iterate_is_polynomial(phi1));
  // Polynomials fix infinity.
  auto cubic = make_map(ints({2, -1, 0, 5}), ints({3, 0, 0, 0}));
  CHECK(is_polynomial(cubic));
  CHECK(evaluate(cubic, ProjPoint::infinity()).is_infinity());
}

TEST_CASE("map height") {
  auto sq = make_map(ints({0, 0, 1}), ints({1, 0, 0}));
  CHECK(map_height(sq).log == 0.0);
  auto phi5 = make_map(ints({-5, 1, 0, 0}), ints({1, 0, 0, 1}));
  CHECK(map_height(phi5).mult == 5);
  CHECK(map_height(phi5).log == doctest::Approx(std::log(5.0)));
  auto pell = make_map(ints({0, 0, 0, 0, 1}), ints({4, 0, -4, 0, 1}));
  CHECK(map_height(pell).mult == 4);
}

TEST_CASE("coefficient tuple round trip") {
  auto phi1 = make_map(ints({-1, 1, 0, 0}), ints({1, 0, 0, 1}));
  CHECK(format_coefficients(phi1) == "[-1,1,0,0 | 1,0,0,1]");
  CHECK(parse_coefficients(format_coefficients(phi1)) == phi1);
  CHECK_THROWS_AS(parse_coefficients("[1,2,3]"), Error);
}

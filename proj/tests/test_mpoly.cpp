#include <random>

#include "doctest.h"
#include "dynorb/error.hpp"
#include "dynorb/mpoly.hpp"

using namespace dynorb;

namespace {

MPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 3), c(-5, 5), n(1, 5);
  MPoly p;
  for (int k = n(rng); k > 0; --k)
    p += MPoly::term(make_monomial({{Var::X, e(rng)}, {Var::T, e(rng)}, {Var::S, e(rng)}}), Int(c(rng)));
  return p;
}

std::array<Int, kNumVars> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> v(-7, 7);
  return {Int(v(rng)), Int(v(rng)), Int(v(rng)), Int(v(rng)), Int(v(rng))};
}

}  // namespace

TEST_CASE("ring operations agree with pointwise evaluation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const MPoly a = random_poly(rng), b = random_poly(rng);
    const auto v = random_point(rng);
    CHECK((a + b).evaluate_int(v) == a.evaluate_int(v) + b.evaluate_int(v));
    CHECK((a - b).evaluate_int(v) == a.evaluate_int(v) - b.evaluate_int(v));
    CHECK((a * b).evaluate_int(v) == a.evaluate_int(v) * b.evaluate_int(v));
    CHECK(a.pow(3).evaluate_int(v) == pow_int(a.evaluate_int(v), 3));
    if (!b.is_zero()) CHECK(MPoly::exact_div(a * b, b) == a);
  }
}

TEST_CASE("exact division rejects non-divisors") {
  const MPoly x = MPoly::var(Var::X), t = MPoly::var(Var::T);
  CHECK_THROWS_AS(MPoly::exact_div(x + MPoly(1), x), Error);
  CHECK((x - t).divides(x * x - t * t));
  CHECK_FALSE((x + t).divides(x * x + t * t));
}

TEST_CASE("printing and structure") {
  const MPoly x = MPoly::var(Var::X), t = MPoly::var(Var::T), r = MPoly::var(Var::R), s = MPoly::var(Var::S);
  CHECK((r * s * x.pow(3) + s * x + t).to_string() == "r*s*x^3+s*x+t");
  CHECK((x - t).to_string() == "x-t");
  CHECK(MPoly().to_string() == "0");
  const MPoly p = t * x.pow(2) - MPoly(3) * x + t.pow(2);
  CHECK(p.degree_in(Var::X) == 2);
  CHECK(p.degree_in(Var::T) == 2);
  CHECK(p.coefficient_of_x(2) == t);
  CHECK(p.coefficient_of_x(0) == t.pow(2));
  CHECK(join_by_x(split_by_x(p, 4)) == p);
  CHECK(p.derivative(Var::X) == MPoly(2) * t * x - MPoly(3));
  CHECK(p.substitute(Var::T, Int(2)) == MPoly(2) * x.pow(2) - MPoly(3) * x + MPoly(4));
  CHECK((MPoly(6) * x + MPoly(4)).content() == 2);
  CHECK(MPoly(7).is_constant());
  CHECK(MPoly(7).constant_value() == 7);
}

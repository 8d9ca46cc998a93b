#include <cmath>
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "dynorb/canonical_height.hpp"
#include "dynorb/error.hpp"
#include "dynorb/families.hpp"

using namespace dynorb;

namespace {

RationalMap poly_map(std::initializer_list<long> coeffs) {
  std::vector<Int> num, den;
  for (long c : coeffs) num.emplace_back(c);
  den.assign(num.size(), Int(0));
  den[0] = 1;
  return make_map(num, den);
}

// h(phi^n P) / d^n from exact iteration: within C/(d^n (d-1)) of hhat.
double naive_height(const RationalMap& m, ProjPoint p, int n) {
  for (int i = 0; i < n; ++i) p = evaluate(m, p);
  return static_cast<double>(weil_height(p).log / std::pow(static_cast<long double>(m.degree()), n));
}

bool table_preperiodic(const RationalMap& m, ProjPoint p) {
  std::unordered_set<ProjPoint, PointHash> seen;
  for (int i = 0; i < 64; ++i) {
    if (!seen.insert(p).second) return true;
    if (std::max(bit_length(p.a()), bit_length(p.b())) > 4096) return false;
    p = evaluate(m, p);
  }
  return false;
}

}  // namespace

TEST_CASE("x^2 at 2 is ln 2") {
  const auto sq = poly_map({0, 0, 1});
  for (double tol : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const auto e = canonical_height(sq, ProjPoint::integer(Int(2)), tol);
    CHECK(e.radius <= tol);
    CHECK(std::abs(e.value - std::log(2.0)) <= tol);
  }
}

TEST_CASE("agrees with naive iteration within the combined bound") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-4, 4), pt(-20, 20), den(1, 20);
  int done = 0;
  while (done < 25) {
    const int d = 2 + done % 2;
    std::vector<Int> num, dn;
    for (int i = 0; i <= d; ++i) {
      num.emplace_back(c(rng));
      dn.emplace_back(c(rng));
    }
    RationalMap m = poly_map({0, 0, 1});
    try {
      m = make_map(num, dn);
    } catch (const Error&) {
      continue;
    }
    const Int a = pt(rng), b = den(rng);
    if (gcd_int(a, b) != 1) continue;
    const auto p = normalize(a, b);
    const auto tc = transition_constants(m);
    const int n = d == 2 ? 12 : 8;
    const double slack = std::max(tc.c_up, tc.c_low) / (std::pow(d, n) * (d - 1));
    const auto e = canonical_height(m, p, 1e-8);
    CHECK(std::abs(e.value - naive_height(m, p, n)) <= slack + 1e-8);
    ++done;
  }
}

TEST_CASE("transition constants bound one step") {
  const auto m = pell_map(Int(2));
  const auto tc = transition_constants(m);
  for (const auto& p : enumerate_points(Int(40))) {
    const double h = weil_height(p).log, h1 = weil_height(evaluate(m, p)).log;
    CHECK(h1 <= 4 * h + tc.c_up + 1e-9);
    CHECK(h1 >= 4 * h - tc.c_low - 1e-9);
  }
}

TEST_CASE("preperiodic points have zero height; the decision matches an orbit table") {
  const auto maps = {poly_map({0, 0, 1}), poly_map({-1, 0, 1}), poly_map({-2, 0, 1}), pell_map(Int(2))};
  for (const auto& m : maps) {
    for (const auto& p : enumerate_points(Int(15))) {
      const bool pre = is_preperiodic(m, p);
      CHECK(pre == table_preperiodic(m, p));
      if (pre) CHECK(canonical_height(m, p, 1e-6).value <= 1e-6);
    }
  }
  const auto sq = poly_map({0, 0, 1});
  CHECK(is_preperiodic(sq, ProjPoint::integer(Int(-1))));
  CHECK(is_preperiodic(sq, ProjPoint::infinity()));
  CHECK_FALSE(is_preperiodic(sq, ProjPoint::integer(Int(2))));
  CHECK(is_preperiodic(poly_map({-2, 0, 1}), ProjPoint::integer(Int(0))));  // 0 -> -2 -> 2 -> 2
}

TEST_CASE("hhat_min over small points") {
  const auto sq = poly_map({0, 0, 1});
  const auto m = hhat_min_empirical(sq, Int(3), 1e-6);
  REQUIRE(m);
  CHECK(std::abs(m->value - std::log(2.0)) < 1e-5);  // 2, -2, 1/2, -1/2 tie; earliest wins
  CHECK(height_mult(m->witness) == 2);
  CHECK(m->witness == enumerate_points(Int(2))[4]);  // first point of height 2
  CHECK_FALSE(hhat_min_empirical(sq, Int(1), 1e-6));  // 0, 1, -1, inf are all preperiodic
}

TEST_CASE("preconditions") {
  const auto lin = make_map({Int(1), Int(2)}, {Int(3), Int(1)});
  CHECK_THROWS_AS(canonical_height(lin, ProjPoint::integer(Int(2)), 1e-6), Error);
  CHECK_THROWS_AS(canonical_height(poly_map({0, 0, 1}), ProjPoint::integer(Int(2)), 1e-14), Error);
  CHECK_THROWS_AS(is_preperiodic(lin, ProjPoint::integer(Int(2))), Error);
}

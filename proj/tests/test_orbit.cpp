#include <numeric>
#include <cmath>

#include "doctest.h"
#include "dynorb/error.hpp"
#include "dynorb/expression.hpp"
#include "dynorb/families.hpp"
#include "dynorb/orbit.hpp"

using namespace dynorb;

namespace {

RationalMap map_of(const char* text) { return to_map(parse_family(text)); }

// Plain loop with no skip-ahead: the reference for scan_orbit.
OrbitRecord plain_scan(const RationalMap& m, ProjPoint b, const SIntSpec& s, const OrbitPolicy& pol) {
  OrbitRecord rec;
  rec.points.push_back(b);
  for (std::size_t n = 0;; ++n) {
    if (is_s_integral(rec.points[n], s)) rec.integral_indices.push_back(n);
    if (n >= pol.n_cap) return rec;
    ProjPoint next = evaluate(m, rec.points[n]);
    if (std::max(bit_length(next.a()), bit_length(next.b())) > pol.height_budget_bits) {
      rec.truncation = Truncation::HeightBudget;
      return rec;
    }
    for (std::size_t i = 0; i < rec.points.size(); ++i)
      if (rec.points[i] == next) {
        rec.cycle = CycleEntry{i, n + 1 - i};
        rec.truncation = Truncation::Completed;
        return rec;
      }
    rec.points.push_back(next);
  }
}

}  // namespace

TEST_CASE("x^4/(x^2-2)^2 from 3/2") {
  const auto m = pell_map(Int(2));
  const auto rec = scan_orbit(m, parse_point("3/2"), SIntSpec(), {6, 1'000'000});
  CHECK(rec.integral_indices == std::vector<std::size_t>{1});
  CHECK(rec.points[1] == ProjPoint::integer(Int(81)));
  CHECK(rec.points[2] == normalize(Int(6561) * 6561, Int(6559) * 6559));
  CHECK(rec.truncation == Truncation::IterationCap);
  const auto c = count_s_integral(rec);
  CHECK(c.count == 1);
  CHECK_FALSE(c.exact);
}

TEST_CASE("matches the plain loop, including height-budget cuts") {
  const char* maps[] = {"x^4/(x^2-2)^2", "(x-1)/(x^3+1)", "x^2-2", "(x^2+1)/(3x)", "x^3"};
  for (const char* text : maps) {
    const auto m = map_of(text);
    for (const auto& b : enumerate_points(Int(6))) {
      for (OrbitPolicy pol : {OrbitPolicy{16, 2000}, OrbitPolicy{5, 1'000'000}, OrbitPolicy{16, 64}}) {
        const auto fast = scan_orbit(m, b, SIntSpec({Int(3)}), pol);
        const auto ref = plain_scan(m, b, SIntSpec({Int(3)}), pol);
        CHECK(fast.points == ref.points);
        CHECK(fast.integral_indices == ref.integral_indices);
        CHECK(fast.truncation == ref.truncation);
        CHECK(fast.cycle.has_value() == ref.cycle.has_value());
      }
    }
  }
}

TEST_CASE("cycles and prefix stability") {
  const auto m = map_of("x^2-2");
  const auto rec = scan_orbit(m, ProjPoint::integer(Int(0)), SIntSpec());
  REQUIRE(rec.cycle);
  CHECK(rec.cycle->index == 2);  // 0 -> -2 -> 2 -> 2
  CHECK(rec.cycle->period == 1);
  CHECK(rec.truncation == Truncation::Completed);
  CHECK(count_s_integral(rec).count == 3);
  CHECK(count_s_integral(rec).exact);
  const auto g = map_of("(x-1)/(x^3+1)");
  const auto longer = scan_orbit(g, parse_point("2/3"), SIntSpec(), {10, 1'000'000});
  const auto shorter = scan_orbit(g, parse_point("2/3"), SIntSpec(), {4, 1'000'000});
  REQUIRE(shorter.points.size() <= longer.points.size());
  for (std::size_t i = 0; i < shorter.points.size(); ++i) CHECK(shorter.points[i] == longer.points[i]);
  CHECK(truncation_name(Truncation::HeightBudget) == "height_budget");
}

TEST_CASE("height budget with no integral points") {
  const auto rec = scan_orbit(map_of("x^2/3"), parse_point("1/2"), SIntSpec(), {16, 100});
  CHECK(rec.truncation == Truncation::HeightBudget);
  CHECK(count_s_integral(rec).count == 0);
  CHECK_FALSE(count_s_integral(rec).exact);
}

TEST_CASE("empirical max iterate") {
  const auto m = pell_map(Int(2));
  const auto sweep = empirical_max_iterate_sweep(m, SIntSpec(), {5, 10});
  CHECK(sweep[0].n_emp == sweep[1].n_emp);
  CHECK(sweep[1].n_emp == 1);
  const auto single = empirical_max_iterate(m, SIntSpec(), Int(10));
  CHECK(single.n_emp == sweep[1].n_emp);
  CHECK(single.witness == sweep[1].witness);
  CHECK_THROWS_AS(empirical_max_iterate(map_of("x^2"), SIntSpec(), Int(5)), Error);
}

TEST_CASE("density of integral preimages: exact counts against brute force") {
  const auto f = map_of("x^4/(x^2-2)^2");
  const auto rep = density_of_integral_preimages(f, SIntSpec(), {5, 10, 20});
  for (std::size_t i = 0; i < rep.b_values.size(); ++i) {
    std::size_t hits = 0, total = 0;
    for (long b = 0; b <= rep.b_values[i]; ++b)
      for (long a = -rep.b_values[i]; a <= rep.b_values[i]; ++a) {
        if (std::gcd(a, b) != 1 || (b == 0 && a != 1)) continue;
        ++total;
        hits += is_s_integral(evaluate(f, normalize(Int(a), Int(b))), SIntSpec());
      }
    CHECK(rep.hits[i] == hits);
    CHECK(rep.totals[i] == total);
  }
  CHECK(rep.trap_applicable);
  CHECK(rep.trap_violations == 0);
  CHECK(rep.ratios[0] > rep.ratios[1]);
  CHECK(rep.ratios[1] > rep.ratios[2]);
  const auto poly = density_of_integral_preimages(map_of("x^2"), SIntSpec(), {3});
  CHECK_FALSE(poly.trap_applicable);
  CHECK(poly.hits[0] == 7);  // the integers -3..3
}

TEST_CASE("log-log slope") {
  CHECK(loglog_slope({1, 2, 4, 8}, {1, 0.5, 0.25, 0.125}) == doctest::Approx(-1.0));
  CHECK(loglog_slope({10, 20}, {3, 12}) == doctest::Approx(2.0));
  CHECK(std::isnan(loglog_slope({1, 2}, {0, 1})));
  CHECK_THROWS_AS(loglog_slope({1}, {1}), Error);
}

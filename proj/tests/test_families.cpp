#include <numeric>
#include <cmath>

#include "doctest.h"
#include "dynorb/error.hpp"
#include "dynorb/expression.hpp"
#include "dynorb/families.hpp"

using namespace dynorb;

namespace {

void require_all_ok(const VerificationReport& rep) {
  CHECK(rep.ok());
  for (const auto& c : rep.checks) CHECK_MESSAGE(c.ok, c.name << " | " << c.detail);
}

// Sylvester determinant by Laplace expansion: slow, independent of Bareiss.
Int laplace(const std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const Int term = m[0][j] * laplace(minor);
    acc += j % 2 ? Int(-term) : term;
  }
  return acc;
}

}  // namespace

TEST_CASE("phi_t: displayed second iterate and resultant") {
  require_all_ok(phi_t_identities());
  require_all_ok(phi_t_symbolic_resultant());
  const auto second = iterate(specialize(phi_t_family(), {Rational(2)}), 2);
  CHECK(second.resultant() == pow_int(Int(3), 24));
}

TEST_CASE("resultant specialization against a Laplace oracle (three_param, level 1)") {
  for (const auto& [r, s, t] : {std::tuple{1L, 1L, 1L}, {2L, -3L, 5L}, {-1L, 2L, 0L}, {3L, 1L, -2L}}) {
    const auto [num, den] = specialize_forms(three_param_family(), {Int(r), Int(s), Int(t)});
    std::vector<Int> n(num.begin(), num.end()), d(den.begin(), den.end());
    const std::size_t deg = n.size() - 1;
    std::vector<std::vector<Int>> syl(2 * deg, std::vector<Int>(2 * deg, Int(0)));
    for (std::size_t row = 0; row < deg; ++row)
      for (std::size_t k = 0; k <= deg; ++k) {
        syl[row][row + k] = n[deg - k];
        syl[row + deg][row + k] = d[deg - k];
      }
    const Int closed = Int(r * s) * (Int(t * t) + Int(s * s) * Int((1 - r) * (1 - r)));
    CHECK(laplace(syl) == closed);
  }
  require_all_ok(resultant_specialization_check(three_param_family(), 1, {{Int(2), Int(-3), Int(5)}, {Int(0), Int(1), Int(1)}}));
}

TEST_CASE("I membership for phi_t is t != -1") {
  for (long num = -6; num <= 6; ++num)
    for (long den = 1; den <= 4; ++den) {
      if (std::gcd(num, den) != 1) continue;
      CHECK(i_membership(phi_t_family(), {Rational(num, den)}) == !(num == -1 && den == 1));
    }
  CHECK_FALSE(i_membership(three_param_family(), {Rational(1), Rational(4), Rational(0)}));
  CHECK(i_membership(three_param_family(), {Rational(1), Rational(1), Rational(1)}));
}

TEST_CASE("three_param structure") { require_all_ok(three_param_identities()); }

TEST_CASE("cube sums and the preimage height bound") {
  const auto small = cube_sum_check(30);
  CHECK(small.violations == 0);
  CHECK(small.solutions == 61 * 61 - 61);  // x = -y gives B = 0
  require_all_ok(preimage_height_bound_check(4));
}

TEST_CASE("pell") {
  CHECK(fundamental_pell(Int(2)) == std::pair<Int, Int>{Int(3), Int(2)});
  CHECK(fundamental_pell(Int(13)) == std::pair<Int, Int>{Int(649), Int(180)});
  const auto s = pell_stream(Int(2), 4);
  CHECK(s[1] == std::pair<Int, Int>{Int(17), Int(12)});
  CHECK(s[3] == std::pair<Int, Int>{Int(577), Int(408)});
  require_all_ok(pell_checks(Int(2), 10));
  require_all_ok(pell_checks(Int(7), 6));
  CHECK_THROWS_AS(fundamental_pell(Int(4)), Error);
  CHECK_THROWS_AS(fundamental_pell(Int(12)), Error);
  CHECK(is_squarefree(Int(30)));
  CHECK_FALSE(is_squarefree(Int(18)));
}

TEST_CASE("reduce_rational_function") {
  const auto f = reduce_rational_function({Int(-1), Int(0), Int(1)}, {Int(-1), Int(1), Int(0)});  // (x^2-1)/(x-1)
  REQUIRE(f.map);
  CHECK(*f.map == make_map({Int(1), Int(1)}, {Int(1), Int(0)}));
  const auto c = reduce_rational_function({Int(0), Int(2), Int(0), Int(2)}, {Int(0), Int(1), Int(0), Int(1)});
  CHECK_FALSE(c.map);
  CHECK(c.constant == 2);
  const auto z = reduce_rational_function({Int(0)}, {Int(1), Int(0), Int(1)});
  CHECK_FALSE(z.map);
  CHECK(z.constant == 0);
  const auto rec = scan_reduced(c, ProjPoint::integer(Int(5)), SIntSpec(), {});
  CHECK(rec.points.size() == 2);
  CHECK(count_s_integral(rec).count == 2);
  CHECK(count_s_integral(rec).exact);
}

TEST_CASE("avg over phi_t: population and exclusions") {
  const auto rep = avg_experiment(phi_t_family(), parse_basepoint("t^3+2"), SIntSpec(), {3, 6}, {8, 20'000});
  for (const auto& row : rep.rows) {
    CHECK(row.population + row.excluded == static_cast<std::size_t>(count_points(row.b).get_si()) - 1);
    CHECK(row.excluded == 1);  // t = -1
  }
  CHECK_THROWS_AS(avg_experiment(phi_t_family(), parse_basepoint("5"), SIntSpec(), {3}), Error);
  CHECK_THROWS_AS(avg_experiment(parse_family("x^2+t"), parse_basepoint("t"), SIntSpec(), {3}), Error);
  const auto pell = avg_experiment(pell_family(Int(2)), parse_basepoint("t"), SIntSpec(), {5, 10}, {8, 20'000});
  CHECK(pell.rows[1].average <= pell.rows[0].average);
}

TEST_CASE("three_param average: slices and normalization") {
  const auto rep = three_param_avg(6, 6, 6, {1, 2}, {10, 20'000});
  for (const auto& row : rep.rows) {
    const std::size_t side = static_cast<std::size_t>(2 * row.b + 1);
    CHECK(row.boxes == side * side * side);
    CHECK(row.t0.points == side * side);
    CHECK(row.t0.total == row.t0.points);
    CHECK(row.t0.violations + row.s0.violations + row.r0.violations == 0);
    CHECK(row.t0.total + row.s0.total + row.r0.total + row.open.total == row.total);
    CHECK(row.average == doctest::Approx(static_cast<double>(row.total) / row.boxes));
  }
  CHECK_THROWS_AS(three_param_avg(5, 6, 6, {1}), Error);
}

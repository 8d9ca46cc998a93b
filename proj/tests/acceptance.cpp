// One line per acceptance criterion: "criterion N: PASS|FAIL  <detail>  [seconds / limit]".
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "dynorb/expression.hpp"
#include "dynorb/families.hpp"
#include "dynorb/function_field.hpp"
#include "dynorb/orbit.hpp"
#include "dynorb/parallel.hpp"
#include "dynorb/verify.hpp"

using namespace dynorb;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

unsigned g_workers = 1;
int g_failures = 0;

std::string first_failure(const VerificationReport& rep) {
  for (const auto& c : rep.checks)
    if (!c.ok) return c.name + ": " + c.detail;
  return rep.checks.empty() ? "no checks ran" : "";
}

Outcome from_report(const VerificationReport& rep) {
  if (rep.ok()) return {true, std::to_string(rep.checks.size()) + " checks"};
  return {false, first_failure(rep)};
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

void criterion(int n, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    o.ok = false;
    o.detail += " (over time limit)";
  }
  if (!o.ok) ++g_failures;
  std::printf("criterion %2d: %s  %s  [%.1fs / %.0fs]\n", n, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs, limit_s);
  std::fflush(stdout);
}

}  // namespace

int main() {
  g_workers = resolve_workers(0);
  const std::uint64_t seed = 1;
  const std::vector<long> decay_bounds{10, 20, 40, 80};

  criterion(1, 10, [] {
    VerificationReport rep = phi_t_identities();
    rep.append(phi_t_symbolic_resultant());
    return from_report(rep);
  });

  criterion(2, 30, [&] { return from_report(cofactor_checks(seed, 50, 100)); });

  criterion(3, 60, [&] { return from_report(canonical_height_checks(seed, 50, 1e-6)); });

  criterion(4, 60, [] { return from_report(preperiodicity_checks(20, g_workers)); });

  criterion(5, 120, [&] {
    const auto map = to_map(parse_family("(x-1)/(x^3+1)"));
    const auto rep = density_of_integral_preimages(map, SIntSpec(), decay_bounds, g_workers);
    std::vector<double> x(decay_bounds.begin(), decay_bounds.end());
    const double slope = loglog_slope(x, rep.ratios);
    const bool dec = strictly_decreasing(rep.ratios);
    const bool in_range = slope >= -1.4 && slope <= -0.6;
    char buf[128];
    std::snprintf(buf, sizeof buf, "hits=%s slope=%.3f decreasing=%d slope_in_[-1.4,-0.6]=%d",
                  join(rep.hits).c_str(), slope, dec, in_range);
    return Outcome{dec && in_range, buf};
  });

  criterion(6, 300, [&] {
    const auto rep = avg_experiment(pell_family(Int(2)), parse_basepoint("t"), SIntSpec(), decay_bounds, {},
                                    g_workers);
    std::vector<double> avg;
    for (const auto& r : rep.rows) avg.push_back(r.average);
    bool nonincreasing = true;
    for (std::size_t i = 1; i < avg.size(); ++i) nonincreasing = nonincreasing && avg[i] <= avg[i - 1];
    const bool quarter = avg.back() < avg.front() / 4;
    return Outcome{nonincreasing && quarter, "Avg=" + join(avg)};
  });

  criterion(7, 10, [&] {
    VerificationReport rep = pell_checks(Int(2), 10);
    const auto dens = density_of_integral_preimages(pell_map(Int(2)), SIntSpec(), decay_bounds, g_workers);
    const bool dec = strictly_decreasing(dens.ratios);
    rep.add("density of integral preimages decays", dec, join(dens.ratios));
    Outcome o = from_report(rep);
    if (o.ok) o.detail += ", density " + join(dens.ratios);
    return o;
  });

  criterion(8, 10, [] {
    const auto r = cube_sum_check(100);
    return Outcome{r.violations == 0,
                   std::to_string(r.solutions) + " solutions, " + std::to_string(r.violations) + " violations"};
  });

  criterion(9, 600, [] {
    const auto rep = three_param_avg(6, 6, 6, {5, 10}, {}, g_workers);
    bool ok = true;
    std::ostringstream os;
    for (const auto& r : rep.rows) {
      ok = ok && r.t0.total == r.t0.points && r.s0.violations == 0 && r.r0.violations == 0;
      os << "B=" << r.b << " avg=" << r.average << " open_max=" << r.open.max_count << " ";
    }
    const bool stable = rep.rows[0].open.max_count == rep.rows[1].open.max_count;
    os << "stable=" << stable;
    return Outcome{ok && stable, os.str()};
  });

  criterion(10, 300, [] {
    const auto res = empirical_max_iterate_sweep(pell_map(Int(2)), SIntSpec(), {50, 100}, {}, g_workers);
    return Outcome{res[0].n_emp == res[1].n_emp,
                   "N_emp(50)=" + std::to_string(res[0].n_emp) + " N_emp(100)=" + std::to_string(res[1].n_emp)};
  });

  criterion(11, 300, [&] {
    VerificationReport rep = ff_checks(seed, 20);  // includes the d = 2, 3 derivative identities
    const auto avg = ff_orbit_avg(2, 2, MPoly::var(Var::F, 4), {}, {1, 2, 3, 4}, {}, g_workers);
    std::vector<double> a;
    for (const auto& r : avg.rows) a.push_back(r.average);
    bool nonincreasing = true;
    for (std::size_t i = 1; i < a.size(); ++i) nonincreasing = nonincreasing && a[i] <= a[i - 1];
    rep.add("ff average nonincreasing over B = 1..4", nonincreasing, join(a));
    Outcome o = from_report(rep);
    if (o.ok) o.detail += ", ff Avg=" + join(a);
    return o;
  });

  criterion(12, 30, [] { return from_report(schanuel_check(500)); });

  std::printf("%d of 12 criteria failed\n", g_failures);
  return g_failures ? 1 : 0;
}

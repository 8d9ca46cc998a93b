#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dynorb/canonical_height.hpp"
#include "dynorb/point.hpp"
#include "dynorb/rational_map.hpp"

namespace dynorb {

enum class Truncation { Completed, HeightBudget, IterationCap };

std::string_view truncation_name(Truncation t);

struct OrbitPolicy {
  unsigned n_cap = 16;
  std::size_t height_budget_bits = 1'000'000;
};

struct CycleEntry {
  std::size_t index = 0;   // first index of the cycle
  std::size_t period = 0;
};

// points[n] = phi^n(b); all points are distinct.
struct OrbitRecord {
  std::vector<ProjPoint> points;
  std::vector<std::size_t> integral_indices;
  std::optional<CycleEntry> cycle;
  Truncation truncation = Truncation::IterationCap;
};

// tc: precomputed transition constants of map, used to stop before
// computing a point that is certainly over the height budget.
OrbitRecord scan_orbit(const RationalMap& map, const ProjPoint& b, const SIntSpec& s,
                       const OrbitPolicy& policy = {}, const TransitionConstants* tc = nullptr);

struct IntegralCount {
  std::size_t count = 0;
  bool exact = false;  // false: certified lower bound only
};

IntegralCount count_s_integral(const OrbitRecord& record);

struct MaxIterate {
  long n_emp = -1;  // -1 when no wandering orbit meets an S-integral point
  std::optional<ProjPoint> witness;
};

// Max over wandering b with H(b) <= bound of the largest n <= n_cap with
// phi^n(b) S-integral. Error(Precondition) if the second iterate is a
// polynomial.
MaxIterate empirical_max_iterate(const RationalMap& map, const SIntSpec& s, const Int& bound,
                                 const OrbitPolicy& policy = {}, unsigned workers = 1);
// One enumeration at the largest bound; bounds increasing.
std::vector<MaxIterate> empirical_max_iterate_sweep(const RationalMap& map, const SIntSpec& s,
                                                    const std::vector<long>& bounds,
                                                    const OrbitPolicy& policy = {}, unsigned workers = 1);

struct DensityReport {
  std::vector<long> b_values;
  std::vector<std::size_t> hits;
  std::vector<Int> totals;
  std::vector<double> ratios;
  bool trap_applicable = false;  // f has a genuine denominator
  std::size_t trap_checked = 0;
  std::size_t trap_violations = 0;
};

// Exact hit counts |{b : H(b) <= B, f(b) S-integral}|. When f is not a
// polynomial, every hit is also checked against the divisor trap: the
// S-free part of G(a, b) divides Res(F, G).
DensityReport density_of_integral_preimages(const RationalMap& f, const SIntSpec& s,
                                            const std::vector<long>& b_values,
                                            unsigned workers = 1);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace dynorb

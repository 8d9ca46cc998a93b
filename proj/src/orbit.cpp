#include "dynorb/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "dynorb/canonical_height.hpp"
#include "dynorb/error.hpp"
#include "dynorb/parallel.hpp"

namespace dynorb {

std::string_view truncation_name(Truncation t) {
  switch (t) {
    case Truncation::Completed: return "completed";
    case Truncation::HeightBudget: return "height_budget";
    case Truncation::IterationCap: return "iteration_cap";
  }
  return "unknown";
}

OrbitRecord scan_orbit(const RationalMap& map, const ProjPoint& b, const SIntSpec& s,
                       const OrbitPolicy& policy, const TransitionConstants* tc) {
  std::optional<TransitionConstants> own;
  const long double budget_log = static_cast<long double>(policy.height_budget_bits) * std::log(2.0L);
  const int d = map.degree();
  OrbitRecord rec;
  std::unordered_map<ProjPoint, std::size_t, PointHash> index;
  rec.points.push_back(b);
  index.emplace(b, 0);
  for (std::size_t n = 0;; ++n) {
    if (is_s_integral(rec.points[n], s)) rec.integral_indices.push_back(n);
    if (n >= policy.n_cap) {
      rec.truncation = Truncation::IterationCap;
      break;
    }
    // h(phi P) >= d h(P) - c_low: skip computing a point that is certainly
    // over budget.
    const auto& cur = rec.points[n];
    if (static_cast<std::size_t>(d) * std::max(bit_length(cur.a()), bit_length(cur.b())) > policy.height_budget_bits) {
      if (!tc) tc = &own.emplace(transition_constants(map));
      if (d * weil_height(cur).log - tc->c_low > budget_log + 1) {
        rec.truncation = Truncation::HeightBudget;
        break;
      }
    }
    ProjPoint next = evaluate(map, cur);
    if (std::max(bit_length(next.a()), bit_length(next.b())) > policy.height_budget_bits) {
      rec.truncation = Truncation::HeightBudget;
      break;
    }
    auto [it, fresh] = index.emplace(next, n + 1);
    if (!fresh) {
      rec.cycle = CycleEntry{it->second, n + 1 - it->second};
      rec.truncation = Truncation::Completed;
      break;
    }
    rec.points.push_back(std::move(next));
  }
  return rec;
}

IntegralCount count_s_integral(const OrbitRecord& record) {
  return {record.integral_indices.size(), record.truncation == Truncation::Completed};
}

std::vector<MaxIterate> empirical_max_iterate_sweep(const RationalMap& map, const SIntSpec& s,
                                                    const std::vector<long>& bounds, const OrbitPolicy& policy,
                                                    unsigned workers) {
  if (bounds.empty()) throw Error(ErrorKind::InvalidInput, "empirical_max_iterate: no height bounds given");
  for (std::size_t i = 0; i < bounds.size(); ++i)
    if (bounds[i] < 1 || (i && bounds[i] <= bounds[i - 1]))
      throw Error(ErrorKind::InvalidInput, "empirical_max_iterate: height bounds must be positive and increasing");
  if (second_iterate_is_polynomial(map))
    throw Error(ErrorKind::Precondition, "empirical_max_iterate: second iterate is a polynomial");
  const auto tc = transition_constants(map);
  const auto points = enumerate_points(Int(bounds.back()), workers);
  std::vector<long> best(points.size(), -1);
  parallel_for(points.size(), workers, [&](std::size_t i) {
    if (is_preperiodic(map, points[i], tc)) return;
    const auto rec = scan_orbit(map, points[i], s, policy, &tc);
    if (!rec.integral_indices.empty()) best[i] = static_cast<long>(rec.integral_indices.back());
  });
  std::vector<MaxIterate> out(bounds.size());
  for (std::size_t k = 0; k < bounds.size(); ++k)
    for (std::size_t i = 0; i < points.size(); ++i)  // height order: first witness wins ties
      if (best[i] > out[k].n_emp && height_mult(points[i]) <= bounds[k]) {
        out[k].n_emp = best[i];
        out[k].witness = points[i];
      }
  return out;
}

MaxIterate empirical_max_iterate(const RationalMap& map, const SIntSpec& s, const Int& bound,
                                 const OrbitPolicy& policy, unsigned workers) {
  if (bound < 1 || !bound.fits_slong_p())
    throw Error(ErrorKind::InvalidInput, "empirical_max_iterate: bound out of range");
  return empirical_max_iterate_sweep(map, s, {bound.get_si()}, policy, workers).front();
}

DensityReport density_of_integral_preimages(const RationalMap& f, const SIntSpec& s,
                                            const std::vector<long>& b_values, unsigned workers) {
  if (b_values.empty()) throw Error(ErrorKind::InvalidInput, "density: no height bounds given");
  for (std::size_t i = 0; i < b_values.size(); ++i)
    if (b_values[i] < 1 || (i && b_values[i] <= b_values[i - 1]))
      throw Error(ErrorKind::InvalidInput, "density: height bounds must be positive and increasing");
  DensityReport rep;
  rep.b_values = b_values;
  rep.trap_applicable = !is_polynomial(f);
  const auto points = enumerate_points(Int(b_values.back()), workers);
  // hit_height[i] = H(b) for hits, 0 otherwise; trap[i] = 1 checked, 2 violated.
  std::vector<long> hit_height(points.size(), 0);
  std::vector<char> trap(points.size(), 0);
  const Int R = abs_int(f.resultant());
  parallel_for(points.size(), workers, [&](std::size_t i) {
    const auto& b = points[i];
    if (!is_s_integral(evaluate(f, b), s)) return;
    hit_height[i] = height_mult(b).get_si();
    if (rep.trap_applicable) {
      const Int g = s.strip(abs_int(f.denominator()(b.a(), b.b())));
      trap[i] = divides(g, R) ? 1 : 2;
    }
  });
  for (long B : b_values) {
    std::size_t hits = 0;
    for (long h : hit_height)
      if (h > 0 && h <= B) ++hits;
    rep.hits.push_back(hits);
    rep.totals.push_back(count_points(B));
    rep.ratios.push_back(static_cast<double>(hits) / rep.totals.back().get_d());
  }
  for (char t : trap) {
    if (t) ++rep.trap_checked;
    if (t == 2) ++rep.trap_violations;
  }
  return rep;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error(ErrorKind::InvalidInput, "loglog_slope: need two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) return std::nan("");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace dynorb

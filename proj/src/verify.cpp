#include "dynorb/verify.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <unordered_set>

#include "dynorb/canonical_height.hpp"
#include "dynorb/error.hpp"
#include "dynorb/families.hpp"
#include "dynorb/function_field.hpp"
#include "dynorb/parallel.hpp"
#include "dynorb/rational_map.hpp"

namespace dynorb {

namespace {

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

ProjPoint random_point(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> a(-range, range), b(0, range);
  for (;;) {
    Int x = a(rng), y = b(rng);
    if ((x != 0 || y != 0) && gcd_int(x, y) == 1) return normalize(x, y);
  }
}

// Orbit table: preperiodic iff a point repeats within 64 steps before the
// coordinates pass 4096 bits.
bool orbit_table_preperiodic(const RationalMap& map, const ProjPoint& p) {
  std::unordered_set<ProjPoint, PointHash> seen;
  ProjPoint q = p;
  for (int i = 0; i < 64; ++i) {
    if (!seen.insert(q).second) return true;
    if (std::max(bit_length(q.a()), bit_length(q.b())) > 4096) return false;
    q = evaluate(map, q);
  }
  return false;
}

FFRat random_ff(std::mt19937_64& rng, int p, int max_height) {
  std::uniform_int_distribution<int> coef(0, p - 1), deg(0, max_height);
  for (;;) {
    std::vector<int> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng)) + 1);
    for (int& c : a) c = coef(rng);
    for (int& c : b) c = coef(rng);
    FFPoly num(p, a), den(p, b);
    if (den.is_zero()) continue;
    FFRat f(num, den);
    if (f.is_constant() || (f + FFRat(FFPoly(p, 1L))).is_zero()) continue;
    return f;
  }
}

}  // namespace

VerificationReport cofactor_checks(std::uint64_t seed, int maps, int pairs) {
  VerificationReport rep;
  std::mt19937_64 rng(seed);
  std::size_t identity_failures = 0, gcd_failures = 0;
  for (int i = 0; i < maps; ++i) {
    const auto m = random_map(rng, 2 + i % 3, 9);
    if (!verify_certificate(m, cofactors(m))) ++identity_failures;
    const Int R = abs_int(m.resultant());
    for (int j = 0; j < pairs; ++j) {
      const ProjPoint p = random_point(rng, 1'000'000);
      const Int g = gcd_int(m.numerator()(p.a(), p.b()), m.denominator()(p.a(), p.b()));
      if (!divides(g, R)) ++gcd_failures;
    }
  }
  const std::string n = std::to_string(maps) + " maps";
  rep.add("cofactor identities p F + q G = R x^D, R y^D (" + n + ")", identity_failures == 0,
          std::to_string(identity_failures) + " failures");
  rep.add("gcd(F(a,b), G(a,b)) divides R (" + n + " x " + std::to_string(pairs) + " pairs)", gcd_failures == 0,
          std::to_string(gcd_failures) + " violations");
  return rep;
}

VerificationReport canonical_height_checks(std::uint64_t seed, int samples, double tol) {
  VerificationReport rep;
  const auto sq = make_map({Int(0), Int(0), Int(1)}, {Int(1), Int(0), Int(0)});
  const auto e = canonical_height(sq, ProjPoint::integer(Int(2)), tol);
  rep.add("hhat_{x^2}(2) = ln 2", std::abs(e.value - std::log(2.0)) <= tol,
          "value " + std::to_string(e.value) + ", radius " + std::to_string(e.radius));
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    const int d = 2 + i % 3;
    const auto m = random_map(rng, d, 5);
    const auto p = random_point(rng, 30);
    const auto h0 = canonical_height(m, p, tol);
    const auto h1 = canonical_height(m, evaluate(m, p), tol);
    const double resid = std::abs(h1.value - d * h0.value);
    worst = std::max(worst, resid);
    if (resid > (d + 1) * tol) ++bad;
  }
  rep.add("functional equation |hhat(phi P) - d hhat(P)| <= (d+1) tol (" + std::to_string(samples) + " samples)",
          bad == 0, "max residual " + std::to_string(worst));
  return rep;
}

VerificationReport preperiodicity_checks(long bound, unsigned workers) {
  VerificationReport rep;
  const std::pair<const char*, RationalMap> maps[] = {
      {"x^2", make_map({Int(0), Int(0), Int(1)}, {Int(1), Int(0), Int(0)})},
      {"x^2-1", make_map({Int(-1), Int(0), Int(1)}, {Int(1), Int(0), Int(0)})},
      {"x^4/(x^2-2)^2", pell_map(Int(2))},
  };
  const auto points = enumerate_points(Int(bound), workers);
  for (const auto& [name, map] : maps) {
    const auto tc = transition_constants(map);
    std::vector<char> disagree(points.size(), 0);
    parallel_for(points.size(), workers, [&](std::size_t i) {
      disagree[i] = is_preperiodic(map, points[i], tc) != orbit_table_preperiodic(map, points[i]);
    });
    std::size_t bad = 0, pre = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      bad += disagree[i];
      pre += is_preperiodic(map, points[i], tc);
    }
    rep.add(std::string("preperiodicity matches orbit table for ") + name + ", H(P) <= " + std::to_string(bound),
            bad == 0,
            std::to_string(points.size()) + " points, " + std::to_string(pre) + " preperiodic, " +
                std::to_string(bad) + " disagreements");
  }
  return rep;
}

VerificationReport schanuel_check(long bound) {
  VerificationReport rep;
  // [a : b] with b > 0, gcd 1, max(|a|, b) <= B, plus infinity.
  long brute = 1;
  for (long b = 1; b <= bound; ++b)
    for (long a = -bound; a <= bound; ++a)
      if (std::gcd(a, b) == 1) ++brute;
  rep.add("count_points(" + std::to_string(bound) + ") equals brute force", count_points(bound) == brute,
          std::to_string(brute));
  const double kappa = static_cast<double>(brute) / (static_cast<double>(bound) * bound);
  const double target = 12.0 / (std::numbers::pi * std::numbers::pi);
  const double rel = std::abs(kappa - target) / target;
  rep.add("count(B)/B^2 within 5% of 12/pi^2 at B=" + std::to_string(bound), rel < 0.05,
          "ratio " + std::to_string(kappa) + ", relative error " + std::to_string(rel));
  return rep;
}

VerificationReport ff_checks(std::uint64_t seed, int count) {
  VerificationReport rep;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int p = i % 2 ? 3 : 2;
    const int d = 2 + (i / 2) % 2;
    rep.append(ff_family_checks(d, random_ff(rng, p, 3)).report);
  }
  for (int d : {2, 3}) rep.append(ff_derivative_identity(d));
  const auto c3 = ff_family_checks(2, FFRat(FFPoly(3, 1L)));
  const auto c5 = ff_family_checks(2, FFRat(FFPoly(5, 2L)));
  rep.append(c3.report);
  rep.append(c5.report);
  rep.add("constant f is flagged isotrivial (f=1 over F_3, f=2 over F_5)", c3.isotrivial && c5.isotrivial);
  bool degenerate = false;
  try {
    ff_family(2, FFRat(FFPoly(3, 2L)));
  } catch (const Error& e) {
    degenerate = e.kind() == ErrorKind::DegenerateFamily;
  }
  rep.add("f = 2 = -1 over F_3 is rejected as degenerate", degenerate);
  for (int p : {2, 3}) rep.append(ff_height_bound_check(2, FFRat(FFPoly::t(p)), p == 2 ? 3 : 2));
  return rep;
}

const std::vector<RegisteredCheck>& verify_registry() {
  static const std::vector<RegisteredCheck> registry = {
      {"families", "phi_t_identities", [](const VerifyOptions&) { return phi_t_identities(); }},
      {"families", "phi_t_symbolic_resultant", [](const VerifyOptions&) { return phi_t_symbolic_resultant(); }},
      {"families", "resultant_specialization_check",
       [](const VerifyOptions&) {
         std::vector<std::vector<Int>> samples;
         for (long t : {-7L, -2L, 0L, 3L, 9L}) samples.push_back({Int(t)});
         return resultant_specialization_check(phi_t_family(), 2, samples);
       }},
      {"families", "three_param_identities", [](const VerifyOptions&) { return three_param_identities(); }},
      {"families", "preimage_height_bound_check",
       [](const VerifyOptions& o) { return preimage_height_bound_check(6, o.workers); }},
      {"families", "pell_checks", [](const VerifyOptions&) { return pell_checks(Int(2), 10); }},
      {"map-algebra", "cofactor_checks", [](const VerifyOptions& o) { return cofactor_checks(o.seed, 50, 100); }},
      {"canonical-height", "canonical_height_checks",
       [](const VerifyOptions& o) { return canonical_height_checks(o.seed, 12, 1e-6); }},
      {"canonical-height", "preperiodicity_checks",
       [](const VerifyOptions& o) { return preperiodicity_checks(12, o.workers); }},
      {"rational-point-core", "schanuel_check", [](const VerifyOptions&) { return schanuel_check(500); }},
      {"function-field", "ff_checks", [](const VerifyOptions& o) { return ff_checks(o.seed, 20); }},
      {"function-field", "ff_family_checks",
       [](const VerifyOptions&) { return ff_family_checks(2, FFRat(FFPoly::t(3))).report; }},
      {"function-field", "ff_derivative_identity",
       [](const VerifyOptions&) {
         auto r = ff_derivative_identity(2);
         r.append(ff_derivative_identity(3));
         return r;
       }},
      {"function-field", "ff_height_bound_check",
       [](const VerifyOptions&) { return ff_height_bound_check(3, FFRat(FFPoly::t(2) + FFPoly(2, 1L)), 2); }},
  };
  return registry;
}

VerificationReport run_verify(const VerifyOptions& options) {
  VerificationReport rep;
  for (const auto& entry : verify_registry()) rep.append(entry.run(options));
  return rep;
}

}  // namespace dynorb

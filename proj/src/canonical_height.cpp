#include "dynorb/canonical_height.hpp"

#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "dynorb/error.hpp"
#include "dynorb/parallel.hpp"

namespace dynorb {

namespace {

// Absolute slack for long double rounding in the logs summed below.
constexpr long double kFloatSlack = 1e-14L;

long double sum_abs(const std::vector<Int>& coeffs) {
  Int s = 0;
  for (const Int& c : coeffs) s += abs_int(c);
  return static_cast<long double>(s.get_d());
}

Int max_abs(const Int& x, const Int& y) { return std::max(abs_int(x), abs_int(y)); }

struct Telescope {
  long double value = 0;
  long double error = 0;
  bool ok = false;
};

// h(v_N)/d^N = h(v_0) + sum_k (lambda(v_k) - log g_k) / d^(k+1), where
// lambda(v) = log max(|F(v)|,|G(v)|) - d log |v| is scale invariant and
// g_k = gcd(F(v_k), G(v_k)) divides R. lambda is evaluated on a W-bit
// truncation w_k of the direction of v_k with a rigorous relative error
// bound; g_k is exact, tracked through residues mod R^(N-k).
Telescope telescope(const RationalMap& map, const ProjPoint& p, unsigned n, unsigned width) {
  const auto& F = map.numerator();
  const auto& G = map.denominator();
  const int d = map.degree();
  const long double S = std::max(sum_abs(F.coeffs), sum_abs(G.coeffs));
  const Int R = abs_int(map.resultant());
  const long double unit = std::ldexp(1.0L, 1 - static_cast<int>(width));

  Telescope out;
  out.value = log_abs(height_mult(p));

  Int modulus = R > 1 ? pow_int(R, n) : Int(1);
  Int ra = p.a(), rb = p.b();
  if (R > 1) {
    mpz_mod(ra.get_mpz_t(), ra.get_mpz_t(), modulus.get_mpz_t());
    mpz_mod(rb.get_mpz_t(), rb.get_mpz_t(), modulus.get_mpz_t());
  }

  Int w0 = p.a(), w1 = p.b();
  long double eps = 0;
  auto truncate = [&](Int& x, Int& y) {
    const std::size_t bits = bit_length(max_abs(x, y));
    if (bits <= width) return false;
    const mp_bitcnt_t shift = bits - width;
    mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), shift);
    mpz_tdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), shift);
    return true;
  };
  if (truncate(w0, w1)) eps = unit;

  long double scale = 1;
  for (unsigned k = 0; k < n; ++k) {
    scale /= d;
    Int fw = F(w0, w1), gw = G(w0, w1);
    const Int mw = max_abs(fw, gw);
    if (mw == 0) return out;
    const long double log_m = log_abs(mw);
    const long double log_norm = log_abs(max_abs(w0, w1));
    const long double lambda = log_m - d * log_norm;

    long double eta = 0, dl = 0;
    if (eps > 0) {
      eta = S * d * eps * std::pow(1 + eps, d - 1) * std::exp(-lambda);
      eta *= 1 + 1e-12L;
      if (!(eta < 0.5L) || !(eps < 0.5L)) return out;
      dl = -std::log1p(-eta) + d * -std::log1p(-eps);
    }

    Int g = 1;
    if (R > 1) {
      Int fm = F(ra, rb), gm = G(ra, rb);
      mpz_mod(fm.get_mpz_t(), fm.get_mpz_t(), modulus.get_mpz_t());
      mpz_mod(gm.get_mpz_t(), gm.get_mpz_t(), modulus.get_mpz_t());
      g = gcd_int(gcd_int(fm, gm), R);
      modulus = divexact(modulus, g);
      ra = divexact(fm, g);
      rb = divexact(gm, g);
      mpz_mod(ra.get_mpz_t(), ra.get_mpz_t(), modulus.get_mpz_t());
      mpz_mod(rb.get_mpz_t(), rb.get_mpz_t(), modulus.get_mpz_t());
    }

    out.value += (lambda - log_abs(g)) * scale;
    out.error += dl * scale;

    w0 = std::move(fw);
    w1 = std::move(gw);
    const bool cut = truncate(w0, w1);
    eps = cut ? eta + unit * (1 + eta) : eta;
  }
  out.ok = true;
  return out;
}

}  // namespace

TransitionConstants transition_constants(const RationalMap& map) {
  const int d = map.degree();
  const auto cert = cofactors(map);
  Int M = 1;
  for (const BinaryForm* f : {&cert.p1, &cert.q1, &cert.p2, &cert.q2})
    for (const Int& c : f->coeffs) M = std::max(M, abs_int(c));
  TransitionConstants tc;
  tc.c_up = map_height(map).log + std::log(static_cast<double>(d + 1));
  tc.c_low = static_cast<double>(log_abs(Int(2 * d) * M));
  return tc;
}

CanonicalHeightEstimate canonical_height(const RationalMap& map, const ProjPoint& p, double tol) {
  const int d = map.degree();
  if (d < 2) throw Error(ErrorKind::Precondition, "canonical_height: degree must be at least 2");
  if (!(tol >= kMinCanonicalTolerance) || !std::isfinite(tol))
    throw Error(ErrorKind::Precondition, "canonical_height: tolerance must be >= 1e-12");
  const auto tc = transition_constants(map);
  const long double C = std::max(tc.c_up, tc.c_low);

  // First n whose tail bound C / (d^n (d - 1)) fits in half the tolerance.
  unsigned n = 0;
  long double tail = C / (d - 1);
  while (tail > tol / 2) {
    tail /= d;
    ++n;
  }

  for (unsigned width = 96; width <= 12288; width *= 2) {
    const Telescope t = telescope(map, p, n, width);
    if (!t.ok) continue;
    const long double radius = tail + t.error + kFloatSlack;
    if (radius > tol) continue;
    CanonicalHeightEstimate est;
    est.value = static_cast<double>(std::max(0.0L, t.value));
    est.radius = static_cast<double>(radius);
    est.iterations_used = n;
    return est;
  }
  throw Error(ErrorKind::SizeBudgetExceeded,
              "canonical_height: working precision budget exhausted before reaching tolerance");
}

bool is_preperiodic(const RationalMap& map, const ProjPoint& p) {
  if (map.degree() < 2) throw Error(ErrorKind::Precondition, "is_preperiodic: degree must be at least 2");
  return is_preperiodic(map, p, transition_constants(map));
}

bool is_preperiodic(const RationalMap& map, const ProjPoint& p, const TransitionConstants& tc) {
  const int d = map.degree();
  if (d < 2) throw Error(ErrorKind::Precondition, "is_preperiodic: degree must be at least 2");
  const double ceiling = (tc.c_up + tc.c_low) / (d - 1) + 1;
  std::unordered_set<ProjPoint, PointHash> seen;
  ProjPoint q = p;
  for (;;) {
    if (weil_height(q).log > ceiling) return false;
    if (!seen.insert(q).second) return true;
    q = evaluate(map, q);
  }
}

std::optional<HhatMin> hhat_min_empirical(const RationalMap& map, const Int& bound, double tol,
                                          unsigned workers) {
  if (map.degree() < 2) throw Error(ErrorKind::Precondition, "hhat_min: degree must be at least 2");
  const auto tc = transition_constants(map);
  const auto points = enumerate_points(bound, workers);
  std::vector<std::optional<HhatMin>> slot(points.size());
  parallel_for(points.size(), workers, [&](std::size_t i) {
    if (is_preperiodic(map, points[i], tc)) return;
    HhatMin m;
    m.estimate = canonical_height(map, points[i], tol);
    m.value = std::max(0.0, m.estimate.value - m.estimate.radius);
    m.witness = points[i];
    slot[i] = m;
  });
  std::optional<HhatMin> best;
  for (auto& s : slot)  // points are in height order, so strict < keeps the first witness
    if (s && (!best || s->value < best->value)) best = std::move(s);
  return best;
}

}  // namespace dynorb

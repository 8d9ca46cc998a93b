#include "dynorb/families.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dynorb/canonical_height.hpp"
#include "dynorb/error.hpp"
#include "dynorb/expression.hpp"
#include "dynorb/parallel.hpp"

namespace dynorb {

namespace {

MPoly t_() { return MPoly::var(Var::T); }

std::array<Rational, kNumVars> param_values(const FamilySpec& family, const std::vector<Rational>& params) {
  if (params.size() != family.arity())
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(family.arity()) + " parameter values, got " +
                                             std::to_string(params.size()));
  std::array<Rational, kNumVars> values{};
  for (std::size_t i = 0; i < params.size(); ++i) values[static_cast<int>(family.params[i])] = params[i];
  return values;
}

std::array<Int, kNumVars> int_values(const FamilySpec& family, const std::vector<Int>& params) {
  if (params.size() != family.arity()) throw Error(ErrorKind::InvalidInput, "parameter count mismatch");
  std::array<Int, kNumVars> values{};
  for (std::size_t i = 0; i < params.size(); ++i) values[static_cast<int>(family.params[i])] = params[i];
  return values;
}

std::string join_ints(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

// Integer vector proportional to a rational vector, with content 1.
std::vector<Int> clear_denominators(const std::vector<Rational>& q) {
  Int l = 1;
  for (const auto& c : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> out;
  out.reserve(q.size());
  for (const auto& c : q) out.push_back(c.get_num() * divexact(l, c.get_den()));
  return out;
}

ProjPoint point_from_rational(const Rational& num, const Rational& den) {
  return normalize(num.get_num() * den.get_den(), den.get_num() * num.get_den());
}

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q * b + r over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  qtrim(a);
  const std::size_t nb = b.size();
  if (a.size() < nb) return {QPoly{}, a};
  QPoly q(a.size() - nb + 1);
  for (std::size_t k = a.size() - nb + 1; k-- > 0;) {
    Rational c = a[k + nb - 1] / b.back();
    q[k] = c;
    for (std::size_t i = 0; i < nb; ++i) a[k + i] -= c * b[i];
  }
  a.resize(nb - 1);
  qtrim(a);
  qtrim(q);
  return {q, a};
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

FamilySpec phi_t_family() {
  FamilySpec f;
  f.params = {Var::T};
  f.d = 3;
  f.num = {-t_(), MPoly(1), MPoly(), MPoly()};
  f.den = {MPoly(1), MPoly(), MPoly(), MPoly(1)};
  return f;
}

FamilySpec three_param_family() {
  const MPoly r = MPoly::var(Var::R), s = MPoly::var(Var::S);
  FamilySpec f;
  f.params = {Var::R, Var::S, Var::T};
  f.d = 3;
  f.num = {t_(), s, MPoly(), r * s};
  f.den = {MPoly(1), MPoly(), MPoly(1), MPoly()};
  return f;
}

FamilySpec pell_family(const Int& D) {
  FamilySpec f;
  f.d = 4;
  f.num = {MPoly(), MPoly(), MPoly(), MPoly(), MPoly(1)};
  f.den = {MPoly(D * D), MPoly(), MPoly(Int(-2 * D)), MPoly(), MPoly(1)};
  return f;
}

RationalMap specialize(const FamilySpec& family, const std::vector<Rational>& params) {
  const auto values = param_values(family, params);
  std::vector<Rational> all;
  for (const auto& c : family.num) all.push_back(c.evaluate(values));
  for (const auto& c : family.den) all.push_back(c.evaluate(values));
  auto ints = clear_denominators(all);
  std::vector<Int> num(ints.begin(), ints.begin() + family.d + 1);
  std::vector<Int> den(ints.begin() + family.d + 1, ints.end());
  return make_map(std::move(num), std::move(den));
}

std::pair<std::vector<Int>, std::vector<Int>> specialize_forms(const FamilySpec& family,
                                                               const std::vector<Int>& params) {
  const auto values = int_values(family, params);
  std::vector<Int> num, den;
  for (const auto& c : family.num) num.push_back(c.evaluate_int(values));
  for (const auto& c : family.den) den.push_back(c.evaluate_int(values));
  return {num, den};
}

bool i_membership(const FamilySpec& family, const std::vector<Rational>& params) {
  try {
    return !second_iterate_is_polynomial(specialize(family, params));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateMap || e.kind() == ErrorKind::DegreeDrop) return false;
    throw;
  }
}

SymbolicForms symbolic_iterate(const FamilySpec& family, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "symbolic_iterate: n must be positive");
  SymbolicForms cur{family.num, family.den};
  for (unsigned i = 1; i < n; ++i)
    cur = SymbolicForms{alg::compose_form(family.num, cur.num, cur.den),
                        alg::compose_form(family.den, cur.num, cur.den)};
  return cur;
}

MPoly symbolic_resultant(const SymbolicForms& forms) { return alg::resultant(forms.num, forms.den); }

VerificationReport phi_t_identities() {
  VerificationReport rep;
  const auto fam = phi_t_family();
  const auto second = symbolic_iterate(fam, 2);
  const auto want_num = split_by_x(parse_expression("-t*x^9+x^7-4*t*x^6+2*x^4-5*t*x^3+x-2*t").num, 9);
  const auto want_den = split_by_x(parse_expression("x^9+3*x^6+4*x^3-3*t*x^2+3*t^2*x-t^3+1").num, 9);
  rep.add("phi_t second iterate numerator", second.num == want_num, join_by_x(second.num).to_string());
  rep.add("phi_t second iterate denominator", second.den == want_den, join_by_x(second.den).to_string());
  rep.add("phi_t second iterate x^7 coefficient is 1", second.num[7] == MPoly(1));
  rep.add("phi_t second iterate x^6 coefficient is -4t", second.num[6] == t_().scaled(Int(-4)));

  std::size_t mismatches = 0, tried = 0;
  std::string detail;
  for (long t = -10; t <= 10; ++t) {
    if (t == -1) continue;
    ++tried;
    std::array<Int, kNumVars> values{};
    values[static_cast<int>(Var::T)] = t;
    std::vector<Int> num, den;
    for (const auto& c : second.num) num.push_back(c.evaluate_int(values));
    for (const auto& c : second.den) den.push_back(c.evaluate_int(values));
    const Int syl = alg::resultant(num, den);
    const Int closed = pow_int(Int(t + 1), 12) * pow_int(Int(t * t - t + 1), 12);
    const Int via_map = iterate(specialize(fam, {Rational(t)}), 2).resultant();
    if (syl != closed || via_map != closed) {
      ++mismatches;
      detail += " t=" + std::to_string(t);
    }
    if (t == 1) rep.add("phi_1 second iterate resultant is 4096", syl == 4096, to_string(syl));
    if (t == 0) rep.add("phi_0 second iterate resultant is 1", syl == 1, to_string(syl));
  }
  rep.add("phi_t second iterate resultant = (t+1)^12 (t^2-t+1)^12 at 20 integers", mismatches == 0 && tried == 20,
          mismatches ? "mismatch at" + detail : std::to_string(tried) + " values");
  return rep;
}

VerificationReport phi_t_symbolic_resultant() {
  VerificationReport rep;
  const auto second = symbolic_iterate(phi_t_family(), 2);
  const MPoly res = symbolic_resultant(second);
  const MPoly closed = (t_() + MPoly(1)).pow(12) * (t_() * t_() - t_() + MPoly(1)).pow(12);
  rep.add("phi_t symbolic second-iterate resultant over Z[t]", res == closed,
          "degree " + std::to_string(res.degree_in(Var::T)));
  return rep;
}

VerificationReport resultant_specialization_check(const FamilySpec& family, unsigned level,
                                                  const std::vector<std::vector<Int>>& samples) {
  VerificationReport rep;
  const auto forms = symbolic_iterate(family, level);
  const MPoly res = symbolic_resultant(forms);
  for (const auto& sample : samples) {
    const auto values = int_values(family, sample);
    std::vector<Int> num, den;
    for (const auto& c : forms.num) num.push_back(c.evaluate_int(values));
    for (const auto& c : forms.den) den.push_back(c.evaluate_int(values));
    const std::string name = "resultant specialization at " + join_ints(sample);
    if (num.back() == 0 && den.back() == 0) {
      rep.add(name, true, "skipped: DegreeDrop");
      continue;
    }
    const Int direct = alg::resultant(num, den);
    const Int symbolic = res.evaluate_int(values);
    rep.add(name, direct == symbolic, to_string(direct));
  }
  return rep;
}

CubeSumResult cube_sum_check(long limit) {
  CubeSumResult out;
  for (long x = -limit; x <= limit; ++x)
    for (long y = -limit; y <= limit; ++y) {
      const long B = x * x * x + y * y * y;
      if (B == 0) continue;
      ++out.solutions;
      const long m = std::max(std::labs(x), std::labs(y));
      if (m * m > 4 * std::labs(B)) ++out.violations;  // max <= 2 sqrt|B|
    }
  return out;
}

VerificationReport preimage_height_bound_check(long bound_t, unsigned workers) {
  VerificationReport rep;
  const auto cubes = cube_sum_check(100);
  rep.add("cube-sum bound max(|x|,|y|) <= 2 sqrt|B| for |x|,|y| <= 100", cubes.violations == 0,
          std::to_string(cubes.solutions) + " solutions, " + std::to_string(cubes.violations) + " violations");
  const long top = 4 * std::max(1L, bound_t) * std::max(1L, bound_t);
  const auto points = enumerate_points(Int(top), workers);
  const auto fam = phi_t_family();
  std::size_t hits = 0, violations = 0;
  for (long t = -bound_t; t <= bound_t; ++t) {
    if (t == -1) continue;
    const long Ht = std::max(1L, std::labs(t));
    const auto map = specialize(fam, {Rational(t)});
    const Int limit = Int(4 * Ht * Ht);
    const Int ht3 = pow_int(Int(Ht), 3);
    std::vector<char> flag(points.size(), 0);
    parallel_for(points.size(), workers, [&](std::size_t i) {
      const Int H = height_mult(points[i]);
      if (H > limit || !is_s_integral(evaluate(map, points[i]), SIntSpec())) return;
      flag[i] = H * H <= 8 * ht3 ? 1 : 2;  // H(b) <= 2 sqrt(2) H(t)^(3/2)
    });
    for (char f : flag) {
      hits += f != 0;
      violations += f == 2;
    }
  }
  rep.add("integral preimages of phi_t satisfy H(b) <= 2 sqrt(2) H(t)^(3/2)", violations == 0,
          std::to_string(hits) + " preimages, " + std::to_string(violations) + " violations");
  return rep;
}

bool is_squarefree(const Int& n) {
  Int m = abs_int(n);
  if (m == 0) return false;
  for (Int p = 2; p * p <= m; ++p) {
    if (divides(p * p, m)) return false;
    while (divides(p, m)) m = divexact(m, p);
  }
  return true;
}

std::pair<Int, Int> fundamental_pell(const Int& D) {
  if (D <= 1 || !is_squarefree(D)) throw Error(ErrorKind::InvalidInput, "pell: D must be a squarefree integer > 1");
  for (long v = 1; v <= kPellSearchLimit; ++v) {
    const Int u2 = 1 + D * Int(v) * Int(v);
    if (is_perfect_square(u2)) return {isqrt(u2), Int(v)};
  }
  throw Error(ErrorKind::SizeBudgetExceeded, "pell: fundamental solution beyond the search limit");
}

std::vector<std::pair<Int, Int>> pell_stream(const Int& D, std::size_t count) {
  const auto [u1, v1] = fundamental_pell(D);
  std::vector<std::pair<Int, Int>> out;
  Int u = u1, v = v1;
  while (out.size() < count) {
    out.emplace_back(u, v);
    Int nu = u1 * u + D * v1 * v;
    Int nv = u1 * v + v1 * u;
    u = std::move(nu);
    v = std::move(nv);
  }
  return out;
}

RationalMap pell_map(const Int& D) { return to_map(pell_family(D)); }

VerificationReport pell_checks(const Int& D, std::size_t count) {
  VerificationReport rep;
  const auto sols = pell_stream(D, count);
  const auto map = pell_map(D);
  std::size_t on_curve = 0, integral = 0;
  for (const auto& [u, v] : sols) {
    on_curve += u * u - D * v * v == 1;
    const auto img = evaluate(map, normalize(u, v));
    integral += is_s_integral(img, SIntSpec());
  }
  const std::string tag = "D=" + to_string(D) + ", " + std::to_string(count) + " solutions";
  rep.add("pell solutions satisfy u^2 - D v^2 = 1 (" + tag + ")", on_curve == sols.size());
  rep.add("pell map sends u/v to an integer (" + tag + ")", integral == sols.size());
  return rep;
}

AvgReport avg_experiment(const FamilySpec& family, const BasepointSpec& beta, const SIntSpec& s,
                         const std::vector<long>& b_values, const OrbitPolicy& policy, unsigned workers) {
  if (family.arity() > 1) throw Error(ErrorKind::Precondition, "avg: family must have at most one parameter");
  if (b_values.empty()) throw Error(ErrorKind::InvalidInput, "avg: no height bounds given");
  for (std::size_t i = 0; i < b_values.size(); ++i)
    if (b_values[i] < 1 || (i && b_values[i] <= b_values[i - 1]))
      throw Error(ErrorKind::InvalidInput, "avg: height bounds must be positive and increasing");
  const Var param = family.arity() == 1 ? family.params[0] : Var::T;
  if (beta.is_constant()) throw Error(ErrorKind::Precondition, "avg: beta must be non-constant");
  for (int v = 0; v < kNumVars; ++v)
    if (Var(v) != param && (beta.num.uses(Var(v)) || beta.den.uses(Var(v))))
      throw Error(ErrorKind::Precondition, "avg: beta may only use the family parameter");
  {
    // generic second iterate: polynomial iff its denominator form is c y^(d^2)
    const auto second = symbolic_iterate(family, 2);
    if (std::all_of(second.den.begin() + 1, second.den.end(), [](const MPoly& c) { return c.is_zero(); }))
      throw Error(ErrorKind::Precondition, "avg: second iterate of the family is a polynomial");
  }
  std::optional<RationalMap> constant_map;
  if (family.arity() == 0) {
    constant_map = to_map(family);
    if (second_iterate_is_polynomial(*constant_map))
      throw Error(ErrorKind::Precondition, "avg: second iterate of the map is a polynomial");
  }

  auto points = enumerate_points(Int(b_values.back()), workers);
  points.erase(std::remove_if(points.begin(), points.end(), [](const ProjPoint& p) { return p.is_infinity(); }),
               points.end());
  struct Slot {
    bool in_population = false;
    std::size_t count = 0;
    bool truncated = false;
  };
  std::vector<Slot> slot(points.size());
  parallel_for(points.size(), workers, [&](std::size_t i) {
    const Rational t(points[i].a(), points[i].b());
    std::optional<RationalMap> local;
    if (!constant_map) {
      if (!i_membership(family, {t})) return;
      local = specialize(family, {t});
    }
    const RationalMap& map = constant_map ? *constant_map : *local;
    std::array<Rational, kNumVars> values{};
    values[static_cast<int>(param)] = t;
    const Rational bn = beta.num.evaluate(values), bd = beta.den.evaluate(values);
    if (bn == 0 && bd == 0) return;
    const auto rec = scan_orbit(map, point_from_rational(bn, bd), s, policy);
    const auto c = count_s_integral(rec);
    slot[i] = {true, c.count, !c.exact};
  });

  AvgReport rep;
  for (long B : b_values) {
    AvgRow row;
    row.b = B;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (height_mult(points[i]) > B) continue;
      if (!slot[i].in_population) {
        ++row.excluded;
        continue;
      }
      ++row.population;
      row.total += slot[i].count;
      row.truncated += slot[i].truncated;
    }
    row.average = row.population ? static_cast<double>(row.total) / static_cast<double>(row.population) : 0.0;
    rep.rows.push_back(row);
  }
  return rep;
}

ReducedFunction reduce_rational_function(std::vector<Int> num, std::vector<Int> den) {
  QPoly n(num.begin(), num.end()), d(den.begin(), den.end());
  qtrim(n);
  qtrim(d);
  if (d.empty()) throw Error(ErrorKind::InvalidInput, "reduce_rational_function: zero denominator");
  ReducedFunction out;
  if (n.empty()) {
    out.constant = 0;
    return out;
  }
  const QPoly g = qgcd(n, d);
  if (g.size() > 1) {
    n = qdivmod(n, g).first;
    d = qdivmod(d, g).first;
  }
  const std::size_t deg = std::max(n.size(), d.size()) - 1;
  if (deg == 0) {
    out.constant = n[0] / d[0];
    return out;
  }
  n.resize(deg + 1);
  d.resize(deg + 1);
  QPoly all = n;
  all.insert(all.end(), d.begin(), d.end());
  const auto ints = clear_denominators(all);
  out.map = make_map(std::vector<Int>(ints.begin(), ints.begin() + deg + 1),
                     std::vector<Int>(ints.begin() + deg + 1, ints.end()));
  return out;
}

OrbitRecord scan_reduced(const ReducedFunction& f, const ProjPoint& b, const SIntSpec& s, const OrbitPolicy& policy) {
  if (f.map) return scan_orbit(*f.map, b, s, policy);
  OrbitRecord rec;
  rec.points.push_back(b);
  if (is_s_integral(b, s)) rec.integral_indices.push_back(0);
  if (policy.n_cap == 0) return rec;
  const ProjPoint c = normalize(f.constant.get_num(), f.constant.get_den());
  if (c == b) {
    rec.cycle = CycleEntry{0, 1};
  } else {
    rec.points.push_back(c);
    if (is_s_integral(c, s)) rec.integral_indices.push_back(1);
    rec.cycle = CycleEntry{1, 1};
  }
  rec.truncation = Truncation::Completed;
  return rec;
}

ThreeParamReport three_param_avg(int n1, int n2, int n3, const std::vector<long>& b_values,
                                 const OrbitPolicy& policy, unsigned workers) {
  if (std::min({n1, n2, n3}) < 6) throw Error(ErrorKind::Precondition, "avg3: exponents must all be >= 6");
  if (b_values.empty()) throw Error(ErrorKind::InvalidInput, "avg3: no box sizes given");
  for (std::size_t i = 0; i < b_values.size(); ++i)
    if (b_values[i] < 1 || (i && b_values[i] <= b_values[i - 1]))
      throw Error(ErrorKind::InvalidInput, "avg3: box sizes must be positive and increasing");
  const long B = b_values.back();
  const long side = 2 * B + 1;
  const std::size_t n = static_cast<std::size_t>(side * side * side);
  enum Slice : char { T0, S0, R0, Open };
  struct Slot {
    Slice slice = Open;
    std::size_t count = 0;
    bool truncated = false;
    bool violation = false;
    long reach = 0;  // max(|r|,|s|,|t|)
  };
  std::vector<Slot> slot(n);
  parallel_for(n, workers, [&](std::size_t idx) {
    const long r = static_cast<long>(idx / (side * side)) - B;
    const long s = static_cast<long>((idx / side) % side) - B;
    const long t = static_cast<long>(idx % side) - B;
    Slot& out = slot[idx];
    out.reach = std::max({std::labs(r), std::labs(s), std::labs(t)});
    out.slice = t == 0 ? T0 : s == 0 ? S0 : r == 0 ? R0 : Open;
    const auto f = reduce_rational_function({Int(t), Int(s), Int(0), Int(r * s)}, {Int(1), Int(0), Int(1), Int(0)});
    const Int beta = pow_int(Int(r), n1) * pow_int(Int(s), n2) * pow_int(Int(t), n3);
    const auto rec = scan_reduced(f, ProjPoint::integer(beta), SIntSpec(), policy);
    const auto c = count_s_integral(rec);
    out.count = c.count;
    out.truncated = !c.exact;
    auto bounded_by = [&](long m) {
      for (const auto& p : rec.points)
        if (p.is_infinity() || abs_int(p.a()) > Int(m) * p.b()) return false;
      return c.count <= static_cast<std::size_t>(2 * m + 1);
    };
    if (out.slice == T0) out.violation = c.count != 1;
    if (out.slice == S0) out.violation = !bounded_by(std::labs(t));
    if (out.slice == R0) out.violation = !bounded_by(std::labs(s) + std::labs(t));
  });

  ThreeParamReport rep{n1, n2, n3, {}};
  for (long b : b_values) {
    ThreeParamRow row;
    row.b = b;
    row.boxes = static_cast<std::size_t>((2 * b + 1) * (2 * b + 1) * (2 * b + 1));
    for (const auto& sl : slot) {
      if (sl.reach > b) continue;
      SliceTally& tally = sl.slice == T0 ? row.t0 : sl.slice == S0 ? row.s0 : sl.slice == R0 ? row.r0 : row.open;
      ++tally.points;
      tally.total += sl.count;
      tally.max_count = std::max(tally.max_count, sl.count);
      tally.violations += sl.violation;
      tally.truncated += sl.truncated;
      row.total += sl.count;
    }
    row.average = static_cast<double>(row.total) / static_cast<double>(row.boxes);
    rep.rows.push_back(row);
  }
  return rep;
}

VerificationReport three_param_identities() {
  VerificationReport rep;
  const auto fam = three_param_family();
  const MPoly r = MPoly::var(Var::R), s = MPoly::var(Var::S);
  const auto second = symbolic_iterate(fam, 2);
  rep.add("3-parameter second iterate numerator x^9 coefficient is r^4 s^4", second.num[9] == (r * s).pow(4),
          second.num[9].to_string());
  rep.add("3-parameter second iterate denominator x^8 coefficient is r^2 s^2", second.den[8] == (r * s).pow(2),
          second.den[8].to_string());
  rep.add("3-parameter second iterate numerator x^7 coefficient is 3 r^3 s^4 + r s^2",
          second.num[7] == r.pow(3) * s.pow(4) * MPoly(3) + r * s * s, second.num[7].to_string());

  const auto m111 = specialize(fam, {Rational(1), Rational(1), Rational(1)});
  rep.add("3-parameter family at (1,1,1) is (x^3+x+1)/(x^2+1)",
          m111 == make_map({Int(1), Int(1), Int(0), Int(1)}, {Int(1), Int(0), Int(1), Int(0)}));

  bool polynomial_cells = true, zero_orbits = true;
  for (long sv = -5; sv <= 5; ++sv) {
    if (i_membership(fam, {Rational(1), Rational(sv), Rational(0)})) polynomial_cells = false;
    for (long rv = -3; rv <= 3; ++rv) {
      const auto f = reduce_rational_function({Int(0), Int(sv), Int(0), Int(rv * sv)}, {Int(1), Int(0), Int(1), Int(0)});
      const auto rec = scan_reduced(f, ProjPoint::integer(Int(0)), SIntSpec(), {});
      if (rec.points.size() != 1 || count_s_integral(rec).count != 1 || !count_s_integral(rec).exact)
        zero_orbits = false;
    }
  }
  rep.add("(1,s,0) lies outside I (phi = s x is a polynomial)", polynomial_cells);
  rep.add("(r,s,0) sends beta = 0 to 0: orbit {0}, count 1", zero_orbits);

  // Random rational triples: polynomial reductions only occur with t = 0,
  // where beta = 0 is fixed.
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 5);
  std::size_t polynomial_cases = 0, bad = 0;
  for (int i = 0; i < 200; ++i) {
    Rational q[3];
    for (auto& x : q) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    if (i % 10 == 0) q[2] = 0;
    if (i % 20 == 0) q[0] = 1;
    const Rational rs = q[0] * q[1];
    const auto f = reduce_rational_function(
        clear_denominators({q[2], q[1], Rational(0), rs}), {Int(1), Int(0), Int(1), Int(0)});
    Rational beta = 1;
    for (const auto& x : q) {
      Rational p6 = x * x * x;
      beta *= p6 * p6;
    }
    const auto rec = scan_reduced(f, normalize(beta.get_num(), beta.get_den()), SIntSpec(), {6, 100'000});
    const bool polynomial = !f.map || is_polynomial(*f.map);
    if (polynomial) {
      ++polynomial_cases;
      if (!(rec.points.size() == 1 && rec.points[0] == ProjPoint::integer(Int(0)))) ++bad;
    }
  }
  rep.add("polynomial specializations at 200 rational triples have beta-orbit {0}", bad == 0,
          std::to_string(polynomial_cases) + " polynomial cases");
  rep.append(resultant_specialization_check(fam, 1, {{Int(1), Int(1), Int(1)}, {Int(2), Int(-3), Int(5)},
                                                     {Int(0), Int(2), Int(1)}}));
  return rep;
}

}  // namespace dynorb

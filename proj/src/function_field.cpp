#include "dynorb/function_field.hpp"

#include <algorithm>
#include <unordered_map>

#include "dynorb/error.hpp"
#include "dynorb/expression.hpp"
#include "dynorb/parallel.hpp"

namespace dynorb {

namespace {

int mod(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void check_prime(int p) {
  bool prime = p >= 2 && p <= kMaxFieldPrime;
  for (int q = 2; prime && q * q <= p; ++q) prime = p % q != 0;
  if (!prime)
    throw Error(ErrorKind::InvalidInput, "field characteristic must be a prime <= 97");
}

void same_field(const FFPoly& a, const FFPoly& b) {
  if (a.p() != b.p()) throw Error(ErrorKind::InvalidInput, "polynomials over different fields");
}

using XPoly = alg::Poly<FFPoly>;  // coefficients in F_p[t], index = power of x
using KPoly = alg::Poly<FFRat>;   // coefficients in F_p(t)

KPoly to_k(const XPoly& v) {
  KPoly out;
  for (const auto& c : v) out.emplace_back(c);
  return out;
}

int x_degree(const XPoly& v) { return alg::degree(v); }

// All polynomials of degree <= bound (zero included), in counting order.
std::vector<FFPoly> all_polys(int p, int bound) {
  std::vector<FFPoly> out;
  long n = 1;
  for (int i = 0; i <= bound; ++i) n *= p;
  for (long code = 0; code < n; ++code) {
    std::vector<int> c;
    for (long k = code; k > 0; k /= p) c.push_back(static_cast<int>(k % p));
    out.emplace_back(p, std::move(c));
  }
  return out;
}

}  // namespace

int inverse_mod(int a, int p) {
  a = mod(a, p);
  if (a == 0) throw Error(ErrorKind::InvalidInput, "inverse of zero in F_p");
  int r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = static_cast<int>(static_cast<long>(r) * b % p);
    b = static_cast<int>(static_cast<long>(b) * b % p);
    e >>= 1;
  }
  return r;
}

// ---- FFPoly ----

FFPoly::FFPoly(int p, long constant) : p_(p) {
  check_prime(p);
  if (mod(constant, p)) c_.push_back(mod(constant, p));
}

FFPoly::FFPoly(int p, std::vector<int> coeffs) : p_(p), c_(std::move(coeffs)) {
  check_prime(p);
  for (int& c : c_) c = mod(c, p);
  trim();
}

FFPoly FFPoly::t(int p, int power) {
  std::vector<int> c(static_cast<std::size_t>(power) + 1, 0);
  c.back() = 1;
  return FFPoly(p, std::move(c));
}

FFPoly FFPoly::from_mpoly(int p, const MPoly& m) {
  std::vector<int> c(static_cast<std::size_t>(std::max(0, m.degree_in(Var::T))) + 1, 0);
  for (const auto& [mono, coef] : m.terms()) {
    for (Var v : {Var::X, Var::R, Var::S, Var::F})
      if (exponent_of(mono, v))
        throw Error(ErrorKind::InvalidInput, "polynomial over F_p(t) may only use t");
    Int r = coef % p;
    c[exponent_of(mono, Var::T)] = mod(r.get_si(), p);
  }
  return FFPoly(p, std::move(c));
}

void FFPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FFPoly FFPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse_mod(lead(), p_));
}

FFPoly FFPoly::scaled(int s) const {
  std::vector<int> c(c_);
  for (int& x : c) x = static_cast<int>(static_cast<long>(x) * mod(s, p_) % p_);
  return FFPoly(p_, std::move(c));
}

FFPoly operator+(const FFPoly& a, const FFPoly& b) {
  same_field(a, b);
  std::vector<int> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % a.p_;
  return FFPoly(a.p_, std::move(c));
}

FFPoly operator-(const FFPoly& a) {
  std::vector<int> c(a.c_);
  for (int& x : c) x = (a.p_ - x) % a.p_;
  return FFPoly(a.p_, std::move(c));
}

FFPoly operator-(const FFPoly& a, const FFPoly& b) { return a + (-b); }

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FFPoly(a.p_, 0L);
  std::vector<long> acc(a.c_.size() + b.c_.size() - 1, 0);
  const long p = a.p_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += static_cast<long>(a.c_[i]) * b.c_[j];
    if (i % 1024 == 1023)
      for (auto& x : acc) x %= p;
  }
  std::vector<int> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<int>(acc[i] % p);
  return FFPoly(a.p_, std::move(c));
}

FFPoly FFPoly::pow(unsigned e) const {
  FFPoly r(p_, 1L), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

std::pair<FFPoly, FFPoly> FFPoly::divmod(const FFPoly& a, const FFPoly& b) {
  same_field(a, b);
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by the zero polynomial");
  const int p = a.p_;
  if (a.degree() < b.degree()) return {FFPoly(p, 0L), a};
  std::vector<int> r = a.c_;
  std::vector<int> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const int inv = inverse_mod(b.lead(), p);
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const int c = static_cast<int>(static_cast<long>(r[k + db]) * inv % p);
    q[k] = c;
    if (!c) continue;
    for (int i = 0; i <= db; ++i) r[k + i] = mod(r[k + i] - static_cast<long>(c) * b.c_[i], p);
  }
  r.resize(static_cast<std::size_t>(db));
  return {FFPoly(p, std::move(q)), FFPoly(p, std::move(r))};
}

FFPoly FFPoly::exact_div(const FFPoly& a, const FFPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidInput, "inexact polynomial division");
  return q;
}

FFPoly FFPoly::gcd(FFPoly a, FFPoly b) {
  same_field(a, b);
  while (!b.is_zero()) {
    FFPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int FFPoly::value_at(int x) const {
  long acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = (acc * x + c_[i]) % p_;
  return static_cast<int>(acc);
}

bool FFPoly::is_irreducible() const {
  const int n = degree();
  if (n < 1) return false;
  if (n == 1) return true;
  for (int k = 1; 2 * k <= n; ++k) {
    // monic divisors of degree k
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p_;
    for (long code = 0; code < count; ++code) {
      std::vector<int> c(static_cast<std::size_t>(k) + 1, 0);
      long v = code;
      for (int i = 0; i < k; ++i, v /= p_) c[i] = static_cast<int>(v % p_);
      c[k] = 1;
      if (divmod(*this, FFPoly(p_, std::move(c))).second.is_zero()) return false;
    }
  }
  return true;
}

std::string FFPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c_[i]);
      continue;
    }
    if (c_[i] != 1) s += std::to_string(c_[i]) + "*";
    s += "t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

FFPoly FFPoly::parse(int p, std::string_view text) {
  FFRat r = FFRat::parse(p, text);
  if (!r.den().is_constant()) throw Error(ErrorKind::InvalidInput, "expected a polynomial in t");
  return r.num();
}

// ---- FFRat ----

FFRat::FFRat(FFPoly num) : num_(std::move(num)), den_(num_.p(), 1L) {}

FFRat::FFRat(FFPoly num, FFPoly den) {
  same_field(num, den);
  if (den.is_zero()) throw Error(ErrorKind::InvalidInput, "zero denominator in F_p(t)");
  const FFPoly g = FFPoly::gcd(num, den);
  num = FFPoly::exact_div(num, g);
  den = FFPoly::exact_div(den, g);
  const int inv = inverse_mod(den.lead(), den.p());
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

FFRat operator+(const FFRat& a, const FFRat& b) { return FFRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
FFRat operator-(const FFRat& a) { return FFRat(-a.num_, a.den_); }
FFRat operator-(const FFRat& a, const FFRat& b) { return a + (-b); }
FFRat operator*(const FFRat& a, const FFRat& b) { return FFRat(a.num_ * b.num_, a.den_ * b.den_); }
FFRat operator/(const FFRat& a, const FFRat& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero in F_p(t)");
  return FFRat(a.num_ * b.den_, a.den_ * b.num_);
}

FFRat FFRat::pow(unsigned e) const { return FFRat(num_.pow(e), den_.pow(e)); }

std::string FFRat::to_string() const {
  auto wrap = [](const FFPoly& q) {
    const auto& c = q.coeffs();
    const bool single = std::count_if(c.begin(), c.end(), [](int x) { return x != 0; }) <= 1;
    return single ? q.to_string() : "(" + q.to_string() + ")";
  };
  if (den_.degree() == 0) return num_.to_string();
  return wrap(num_) + "/" + wrap(den_);
}

FFRat FFRat::parse(int p, std::string_view text) {
  const RationalExpr e = parse_expression(text);
  const FFPoly den = FFPoly::from_mpoly(p, e.den);
  if (den.is_zero()) throw Error(ErrorKind::InvalidInput, "denominator vanishes mod p");
  return FFRat(FFPoly::from_mpoly(p, e.num), den);
}

// ---- points ----

FFPoint FFPoint::make(FFPoly z0, FFPoly z1) {
  same_field(z0, z1);
  if (z0.is_zero() && z1.is_zero()) throw Error(ErrorKind::BothZero, "point with both coordinates zero");
  FFPoint pt;
  const int p = z0.p();
  if (z1.is_zero()) {
    pt.z0_ = FFPoly(p, 1L);
    pt.z1_ = FFPoly(p, 0L);
    return pt;
  }
  const FFPoly g = FFPoly::gcd(z0, z1);
  if (g.degree() > 0) {
    z0 = FFPoly::exact_div(z0, g);
    z1 = FFPoly::exact_div(z1, g);
  }
  const int inv = inverse_mod(z1.lead(), p);
  pt.z0_ = z0.scaled(inv);
  pt.z1_ = z1.scaled(inv);
  return pt;
}

std::string FFPoint::to_string() const { return "[" + z0_.to_string() + "," + z1_.to_string() + "]"; }

std::size_t FFPointHash::operator()(const FFPoint& p) const {
  std::size_t h = 1469598103934665603ull;
  for (const FFPoly* q : {&p.z0(), &p.z1()}) {
    for (int c : q->coeffs()) h = (h ^ static_cast<std::size_t>(c)) * 1099511628211ull;
    h = (h ^ 0xffu) * 1099511628211ull;
  }
  return h;
}

int ff_height(const FFPoint& p) { return std::max({0, p.z0().degree(), p.z1().degree()}); }

bool ff_is_s_integral(const FFPoint& p, const std::vector<FFPoly>& s) {
  if (p.is_infinity()) return false;
  FFPoly z = p.z1();
  for (const auto& q : s) {
    for (;;) {
      auto [quot, rem] = FFPoly::divmod(z, q);
      if (!rem.is_zero()) break;
      z = std::move(quot);
    }
  }
  return z.degree() == 0;
}

std::vector<FFPoly> ff_places(int p, const std::vector<FFPoly>& s) {
  std::vector<FFPoly> out;
  for (const auto& q : s) {
    if (q.p() != p) throw Error(ErrorKind::InvalidInput, "place over a different field");
    if (!q.is_irreducible()) throw Error(ErrorKind::InvalidInput, "place " + q.to_string() + " is not irreducible");
    FFPoly m = q.monic();
    if (std::find(out.begin(), out.end(), m) != out.end())
      throw Error(ErrorKind::InvalidInput, "repeated place " + m.to_string());
    out.push_back(std::move(m));
  }
  return out;
}

// ---- maps ----

FFMap::FFMap(std::vector<FFPoly> num, std::vector<FFPoly> den) {
  if (num.size() != den.size() || num.size() < 2)
    throw Error(ErrorKind::InvalidInput, "map forms must have equal degree >= 1");
  const int p = num[0].p();
  if (num.back().is_zero() && den.back().is_zero())
    throw Error(ErrorKind::DegreeDrop, "both leading coefficients vanish");
  FFPoly g(p, 0L);
  for (const auto* v : {&num, &den})
    for (const auto& c : *v) g = FFPoly::gcd(g, c);
  if (g.is_zero()) throw Error(ErrorKind::DegenerateMap, "zero map");
  // Scale so the leading coefficient of the highest nonzero numerator
  // coefficient (or denominator if F = 0) is 1.
  const FFPoly* top = nullptr;
  for (std::size_t i = num.size(); i-- > 0 && !top;)
    if (!num[i].is_zero()) top = &num[i];
  for (std::size_t i = den.size(); i-- > 0 && !top;)
    if (!den[i].is_zero()) top = &den[i];
  const FFPoly unit = FFPoly(p, static_cast<long>(FFPoly::exact_div(*top, g).lead()));
  const FFPoly divisor = g * unit;
  for (auto* v : {&num, &den})
    for (auto& c : *v) c = FFPoly::exact_div(c, divisor);
  num_ = std::move(num);
  den_ = std::move(den);
  res_ = alg::resultant(num_, den_);
  if (res_.is_zero()) throw Error(ErrorKind::DegenerateMap, "resultant vanishes");
}

int FFMap::height() const {
  int h = 0;
  for (const auto* v : {&num_, &den_})
    for (const auto& c : *v) h = std::max(h, c.degree());
  return h;
}

FFPoint FFMap::operator()(const FFPoint& pt) const {
  FFPoly f = alg::eval_form<FFPoly, FFPoly>(num_, pt.z0(), pt.z1());
  FFPoly g = alg::eval_form<FFPoly, FFPoly>(den_, pt.z0(), pt.z1());
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::DegenerateMap, "both forms vanish");
  return FFPoint::make(std::move(f), std::move(g));
}

FFMap ff_compose(const FFMap& outer, const FFMap& inner) {
  return FFMap(alg::compose_form(outer.numerator(), inner.numerator(), inner.denominator()),
               alg::compose_form(outer.denominator(), inner.numerator(), inner.denominator()));
}

FFTransition ff_transition_constants(const FFMap& map) {
  FFTransition tc;
  tc.c_up = map.height();
  for (bool target_x : {true, false}) {
    auto [pc, qc] = alg::bezout_cofactors(map.numerator(), map.denominator(), map.resultant(), target_x);
    for (const auto* v : {&pc, &qc})
      for (const auto& c : *v) tc.c_low = std::max(tc.c_low, c.degree());
  }
  return tc;
}

FFMap ff_family(int d, const FFRat& f) {
  if (d < 2) throw Error(ErrorKind::InvalidInput, "family degree must be >= 2");
  const int p = f.p();
  const FFPoly& a = f.num();
  const FFPoly& b = f.den();
  if ((a + b).is_zero()) throw Error(ErrorKind::DegenerateFamily, "f = -1 makes the family degenerate");
  if (a.is_zero()) throw Error(ErrorKind::DegenerateFamily, "f = 0 collapses the family to x");
  std::vector<FFPoly> num(static_cast<std::size_t>(d) + 1, FFPoly(p, 0L));
  std::vector<FFPoly> den = num;
  num[d] = a + b;  // b (f+1) x^d
  den[d - 1] = b;  // b x^(d-1) y + a y^d
  den[0] = a;
  return FFMap(std::move(num), std::move(den));
}

VerificationReport ff_derivative_identity(int d) {
  VerificationReport rep;
  const MPoly x = MPoly::var(Var::X), f = MPoly::var(Var::F);
  const MPoly N = (f + MPoly(1)) * x.pow(d);
  const MPoly D = x.pow(d - 1) + f;
  const MPoly lhs = N.derivative(Var::X) * D - N * D.derivative(Var::X);
  const MPoly rhs = (f + MPoly(1)) * x.pow(d - 2) * (x.pow(d) + MPoly(d) * f * x);
  rep.add("family derivative numerator = (f+1) x^(d-2) (x^d + d f x) over Z[x,f], d=" + std::to_string(d),
          lhs == rhs, lhs.to_string());
  return rep;
}

FFFamilyChecks ff_family_checks(int d, const FFRat& f) {
  const int p = f.p();
  FFFamilyChecks out{ff_family(d, f), {}, f.is_constant(), {}};
  auto& rep = out.report;
  const FFMap& phi = out.map;
  const std::string tag = " (p=" + std::to_string(p) + ", d=" + std::to_string(d) + ", f=" + f.to_string() + ")";
  const FFPoint zero = FFPoint::make(FFPoly(p, 0L), FFPoly(p, 1L));
  const FFPoint one = FFPoint::make(FFPoly(p, 1L), FFPoly(p, 1L));
  const FFPoint inf = FFPoint::infinity(p);
  rep.add("fixes 0, 1, infinity" + tag, phi(zero) == zero && phi(one) == one && phi(inf) == inf);

  // Affine x-derivative of N/D: N'D - ND' against (a+b) x^(d-2) (b x^d + d a x).
  const FFPoly& a = f.num();
  const FFPoly& b = f.den();
  const XPoly& N = phi.numerator();
  const XPoly& D = phi.denominator();
  const XPoly lhs = alg::sub(alg::mul(alg::derivative(N), D), alg::mul(N, alg::derivative(D)));
  XPoly inner(static_cast<std::size_t>(d) + 1, FFPoly(p, 0L));
  inner[d] = b;
  inner[1] = inner[1] + a.scaled(d);
  XPoly shift(static_cast<std::size_t>(d) - 1, FFPoly(p, 0L));
  shift[d - 2] = a + b;
  XPoly rhs = alg::mul(shift, inner);
  // phi's forms may carry a unit scalar; compare up to that constant.
  XPoly l = lhs, r = rhs;
  alg::trim(l);
  alg::trim(r);
  bool deriv_ok = !l.empty() && l.size() == r.size();
  if (deriv_ok) {
    const FFRat lam = FFRat(l.back()) / FFRat(r.back());
    deriv_ok = lam.num().degree() == 0 && lam.den().degree() == 0;
    for (std::size_t i = 0; deriv_ok && i < l.size(); ++i) deriv_ok = FFRat(l[i]) == lam * FFRat(r[i]);
  }
  rep.add("derivative matches (f+1) x^(d-2) (x^d + d f x) / (x^(d-1)+f)^2 and is nonzero" + tag, deriv_ok);
  rep.add("isotrivial flag equals 'f is constant'" + tag, out.isotrivial == f.is_constant());

  const FFMap second = ff_compose(phi, phi);
  const int dn = x_degree(second.numerator()), dd = x_degree(second.denominator());
  rep.add("second iterate degrees: numerator d^2, denominator d^2-1" + tag, dn == d * d && dd == d * d - 1,
          std::to_string(dn) + "/" + std::to_string(dd));
  rep.add("second iterate is not a polynomial" + tag, dd > 0);

  // Displayed form: (f+1) x^(d^2) / j, j = D (( f+1)^(d-1) x^(d^2-d) + f D^(d-1)).
  const FFRat one_k(FFPoly(p, 1L)), zero_k(FFPoly(p, 0L));
  const FFRat f1 = f + one_k;
  KPoly Dk(static_cast<std::size_t>(d), zero_k);
  Dk[0] = f;
  Dk[d - 1] = one_k;
  KPoly lead_term(static_cast<std::size_t>(d * d - d) + 1, zero_k);
  lead_term.back() = f1.pow(static_cast<unsigned>(d - 1));
  const KPoly j = alg::mul(Dk, alg::add(lead_term, alg::scale(alg::power(Dk, static_cast<unsigned>(d - 1), one_k), f)));
  KPoly disp_num(static_cast<std::size_t>(d * d) + 1, zero_k);
  disp_num.back() = f1;
  KPoly A = alg::mul(to_k(second.numerator()), j);
  KPoly B = alg::mul(to_k(second.denominator()), disp_num);
  alg::trim(A);
  alg::trim(B);
  bool proportional = !A.empty() && A.size() == B.size();
  FFRat lambda = one_k;
  if (proportional) {
    lambda = A.back() / B.back();
    for (std::size_t i = 0; proportional && i < A.size(); ++i) proportional = A[i] == lambda * B[i];
  }
  out.second_iterate_scalar = lambda;
  rep.add("second iterate equals the displayed form up to a scalar" + tag, proportional, "scalar " + lambda.to_string());
  rep.add("second-iterate scalar is (f+1)^d" + tag, proportional && lambda == f1.pow(static_cast<unsigned>(d)));
  return out;
}

FFOrbitRecord ff_scan_orbit(const FFMap& map, const FFPoint& b, const std::vector<FFPoly>& s,
                            const FFOrbitPolicy& policy) {
  FFOrbitRecord rec;
  std::unordered_map<FFPoint, std::size_t, FFPointHash> index;
  rec.points.push_back(b);
  index.emplace(b, 0);
  for (std::size_t n = 0;; ++n) {
    if (ff_is_s_integral(rec.points[n], s)) rec.integral_indices.push_back(n);
    if (n >= policy.n_cap) {
      rec.truncation = Truncation::IterationCap;
      break;
    }
    FFPoint next = map(rec.points[n]);
    if (ff_height(next) > policy.degree_budget) {
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

std::vector<FFRat> ff_enumerate(int p, int bound) {
  check_prime(p);
  std::vector<FFRat> out;
  const auto polys = all_polys(p, bound);
  for (const auto& den : polys) {
    if (den.is_zero() || den.lead() != 1) continue;
    for (const auto& num : polys) {
      if (num.is_constant() && den.is_constant()) continue;
      if (num.is_zero() || FFPoly::gcd(num, den).degree() > 0) continue;
      out.emplace_back(num, den);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FFRat& x, const FFRat& y) { return x.height() < y.height(); });
  return out;
}

std::vector<FFPoint> ff_enumerate_points(int p, int bound) {
  check_prime(p);
  std::vector<FFPoint> out{FFPoint::infinity(p)};
  const auto polys = all_polys(p, bound);
  for (const auto& z1 : polys) {
    if (z1.is_zero() || z1.lead() != 1) continue;
    for (const auto& z0 : polys)
      if (FFPoly::gcd(z0, z1).degree() == 0) out.push_back(FFPoint::make(z0, z1));
  }
  return out;
}

AvgReport ff_orbit_avg(int p, int d, const MPoly& beta, const std::vector<FFPoly>& s,
                       const std::vector<long>& b_values, const FFOrbitPolicy& policy, unsigned workers) {
  check_prime(p);
  if (d < 2) throw Error(ErrorKind::InvalidInput, "ffavg: degree must be >= 2");
  for (Var v : {Var::X, Var::T, Var::R, Var::S})
    if (beta.uses(v)) throw Error(ErrorKind::InvalidInput, "ffavg: beta must be a polynomial in f");
  const int deg_beta = beta.degree_in(Var::F);
  if (deg_beta * (d - 1) <= 2 * d - 1)
    throw Error(ErrorKind::Precondition, "ffavg: deg(beta) must exceed (2d-1)/(d-1)");
  if (b_values.empty()) throw Error(ErrorKind::InvalidInput, "ffavg: no height bounds given");
  for (std::size_t i = 0; i < b_values.size(); ++i)
    if (b_values[i] < 1 || b_values[i] > 8 || (i && b_values[i] <= b_values[i - 1]))
      throw Error(ErrorKind::InvalidInput, "ffavg: height bounds must be increasing within 1..8");
  const auto places = ff_places(p, s);

  // beta as a polynomial in f with coefficients in F_p.
  std::vector<int> bc(static_cast<std::size_t>(deg_beta) + 1, 0);
  for (const auto& [mono, coef] : beta.terms()) bc[exponent_of(mono, Var::F)] = mod(Int(coef % p).get_si(), p);

  const auto fs = ff_enumerate(p, static_cast<int>(b_values.back()));
  struct Slot {
    std::size_t count = 0;
    bool truncated = false;
  };
  std::vector<Slot> slot(fs.size());
  parallel_for(fs.size(), workers, [&](std::size_t i) {
    const FFRat& f = fs[i];
    const FFRat zero_k(FFPoly(p, 0L));
    FFRat value = zero_k;
    for (std::size_t k = bc.size(); k-- > 0;) value = value * f + FFRat(FFPoly(p, static_cast<long>(bc[k])));
    const auto rec = ff_scan_orbit(ff_family(d, f), FFPoint::from(value), places, policy);
    slot[i] = {rec.integral_indices.size(), rec.truncation != Truncation::Completed};
  });

  AvgReport rep;
  for (long B : b_values) {
    AvgRow row;
    row.b = B;
    row.excluded = static_cast<std::size_t>(p);  // the constants f in F_p
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].height() > B) continue;
      ++row.population;
      row.total += slot[i].count;
      row.truncated += slot[i].truncated;
    }
    row.average = row.population ? static_cast<double>(row.total) / static_cast<double>(row.population) : 0.0;
    rep.rows.push_back(row);
  }
  return rep;
}

VerificationReport ff_height_bound_check(int d, const FFRat& f, int bound) {
  VerificationReport rep;
  const FFMap phi = ff_family(d, f);
  const auto tc = ff_transition_constants(phi);
  std::size_t n = 0, bad = 0;
  for (const auto& pt : ff_enumerate_points(f.p(), bound)) {
    const int h = ff_height(pt), h1 = ff_height(phi(pt));
    ++n;
    if (h1 > d * h + tc.c_up || h1 < d * h - tc.c_low) ++bad;
  }
  rep.add("degree height bounds d h - " + std::to_string(tc.c_low) + " <= h(phi P) <= d h + " +
              std::to_string(tc.c_up) + " (p=" + std::to_string(f.p()) + ", d=" + std::to_string(d) +
              ", f=" + f.to_string() + ", h(P) <= " + std::to_string(bound) + ")",
          bad == 0, std::to_string(n) + " points, " + std::to_string(bad) + " violations");
  return rep;
}

}  // namespace dynorb

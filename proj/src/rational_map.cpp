#include "dynorb/rational_map.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "dynorb/error.hpp"

namespace dynorb {

namespace {

void reduce_content(std::vector<Int>& num, std::vector<Int>& den, Int* content_out = nullptr) {
  Int g = 0;
  for (const Int& c : num) g = gcd_int(g, c);
  for (const Int& c : den) g = gcd_int(g, c);
  if (content_out) *content_out = g;
  if (g > 1) {
    for (Int& c : num) c = divexact(c, g);
    for (Int& c : den) c = divexact(c, g);
  }
}

// First nonzero coefficient reading the numerator then the denominator, each
// from the highest power of X down.
int leading_sign(const std::vector<Int>& num, const std::vector<Int>& den) {
  for (auto it = num.rbegin(); it != num.rend(); ++it)
    if (*it != 0) return sgn(*it);
  for (auto it = den.rbegin(); it != den.rend(); ++it)
    if (*it != 0) return sgn(*it);
  return 0;
}

void check_budget(const std::vector<Int>& coeffs, std::size_t budget_bits) {
  for (const Int& c : coeffs)
    if (bit_length(c) > budget_bits)
      throw Error(ErrorKind::SizeBudgetExceeded,
                  "coefficient of " + std::to_string(bit_length(c)) + " bits exceeds budget of " +
                      std::to_string(budget_bits) + " bits");
}

}  // namespace

RationalMap make_map(std::vector<Int> num, std::vector<Int> den) {
  if (num.size() != den.size())
    throw Error(ErrorKind::InvalidInput, "make_map: numerator and denominator need d + 1 coefficients each");
  if (num.size() < 2) throw Error(ErrorKind::InvalidInput, "make_map: degree must be at least 1");
  if (num.back() == 0 && den.back() == 0)
    throw Error(ErrorKind::DegreeDrop, "make_map: both forms divisible by Y, true degree is below " +
                                           std::to_string(num.size() - 1));
  reduce_content(num, den);
  if (leading_sign(num, den) < 0) {
    for (Int& c : num) c = -c;
    for (Int& c : den) c = -c;
  }
  Int res = alg::resultant(num, den);
  if (res == 0) throw Error(ErrorKind::DegenerateMap, "make_map: Res(F, G) = 0, forms share a root");
  return RationalMap(BinaryForm{std::move(num)}, BinaryForm{std::move(den)}, std::move(res));
}

Int resultant(const BinaryForm& f, const BinaryForm& g) {
  const std::size_t n = std::max(f.coeffs.size(), g.coeffs.size());
  if (n < 2) throw Error(ErrorKind::InvalidInput, "resultant: forms must have degree >= 1");
  return alg::resultant(alg::pad(f.coeffs, n, Int(0)), alg::pad(g.coeffs, n, Int(0)));
}

CofactorCertificate cofactors(const RationalMap& map) {
  const auto& F = map.numerator().coeffs;
  const auto& G = map.denominator().coeffs;
  CofactorCertificate cert;
  cert.R = map.resultant();
  cert.exponent = 2 * map.degree() - 1;
  auto [p1, q1] = alg::bezout_cofactors(F, G, cert.R, true);
  auto [p2, q2] = alg::bezout_cofactors(F, G, cert.R, false);
  cert.p1.coeffs = std::move(p1);
  cert.q1.coeffs = std::move(q1);
  cert.p2.coeffs = std::move(p2);
  cert.q2.coeffs = std::move(q2);
  if (!verify_certificate(map, cert))
    throw Error(ErrorKind::DegenerateMap, "cofactors: certificate failed symbolic verification");
  return cert;
}

bool verify_certificate(const RationalMap& map, const CofactorCertificate& cert) {
  const auto& F = map.numerator().coeffs;
  const auto& G = map.denominator().coeffs;
  const std::size_t len = static_cast<std::size_t>(cert.exponent) + 1;
  auto check = [&](const BinaryForm& p, const BinaryForm& q, std::size_t hot) {
    auto lhs = alg::add(alg::mul(p.coeffs, F), alg::mul(q.coeffs, G));
    lhs = alg::pad(lhs, len, Int(0));
    if (lhs.size() != len) return false;
    for (std::size_t i = 0; i < len; ++i)
      if (lhs[i] != (i == hot ? cert.R : Int(0))) return false;
    return true;
  };
  return cert.R != 0 && check(cert.p1, cert.q1, len - 1) && check(cert.p2, cert.q2, 0);
}

ProjPoint evaluate(const RationalMap& map, const ProjPoint& p) {
  Int fx = map.numerator()(p.a(), p.b());
  Int gx = map.denominator()(p.a(), p.b());
  if (fx == 0 && gx == 0) throw Error(ErrorKind::DegenerateMap, "evaluate: both forms vanish");
  // gcd(F(a,b), G(a,b)) divides R, so it can be read off residues mod R
  // instead of running a gcd on the full-size values.
  const Int R = abs_int(map.resultant());
  Int g = R;
  if (R != 1) {
    Int fr = fx % R, gr = gx % R;
    g = gcd_int(gcd_int(fr, gr), R);
  }
#ifndef NDEBUG
  assert(gcd_int(fx, gx) == g);
#endif
  if (g != 1) {
    fx = divexact(fx, g);
    gx = divexact(gx, g);
  }
  return normalize_coprime(std::move(fx), std::move(gx));
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner, std::size_t budget_bits) {
  const auto& f = inner.numerator().coeffs;
  const auto& g = inner.denominator().coeffs;
  auto num = alg::compose_form(outer.numerator().coeffs, f, g);
  auto den = alg::compose_form(outer.denominator().coeffs, f, g);
  Int content;
  reduce_content(num, den, &content);
  check_budget(num, budget_bits);
  check_budget(den, budget_bits);
  const unsigned long d = static_cast<unsigned long>(outer.degree());
  const unsigned long e = static_cast<unsigned long>(inner.degree());
  // Res(F(f,g), G(f,g)) = Res(F,G)^e * Res(f,g)^(d^2); dividing both forms
  // by the content c divides the resultant by c^(2de).
  Int res = pow_int(outer.resultant(), e) * pow_int(inner.resultant(), d * d);
  if (content > 1) res = divexact(res, pow_int(content, 2 * d * e));
  if (leading_sign(num, den) < 0) {
    for (Int& c : num) c = -c;
    for (Int& c : den) c = -c;
    // Negating both forms of degree de scales the resultant by (-1)^(2de).
  }
  return RationalMap(BinaryForm{std::move(num)}, BinaryForm{std::move(den)}, std::move(res));
}

RationalMap iterate(const RationalMap& map, unsigned n, std::size_t budget_bits) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "iterate: n must be positive");
  RationalMap out = map;
  for (unsigned i = 1; i < n; ++i) out = compose(map, out, budget_bits);
  return out;
}

bool is_polynomial(const RationalMap& map) {
  const auto& den = map.denominator().coeffs;
  for (std::size_t i = 1; i < den.size(); ++i)
    if (den[i] != 0) return false;
  return true;
}

bool second_iterate_is_polynomial(const RationalMap& map) {
  return is_polynomial(compose(map, map));
}

HeightValue map_height(const RationalMap& map) {
  Int h = 0;
  for (const Int& c : map.numerator().coeffs) h = std::max(h, abs_int(c));
  for (const Int& c : map.denominator().coeffs) h = std::max(h, abs_int(c));
  return HeightValue{h, static_cast<double>(log_abs(h))};
}

std::string format_coefficients(const RationalMap& map) {
  std::string out = "[";
  auto emit = [&](const std::vector<Int>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ",";
      out += to_string(cs[i]);
    }
  };
  emit(map.numerator().coeffs);
  out += " | ";
  emit(map.denominator().coeffs);
  out += "]";
  return out;
}

RationalMap parse_coefficients(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '[' || c == ']'; }),
          s.end());
  const auto bar = s.find('|');
  if (bar == std::string::npos)
    throw Error(ErrorKind::InvalidInput, "coefficient tuple needs '|' between numerator and denominator");
  auto split = [](const std::string& part) {
    std::vector<Int> out;
    std::stringstream ss(part);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    return out;
  };
  return make_map(split(s.substr(0, bar)), split(s.substr(bar + 1)));
}

}  // namespace dynorb

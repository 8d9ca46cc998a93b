#include "dynorb/mpoly.hpp"

#include <algorithm>

#include "dynorb/error.hpp"

namespace dynorb {

namespace {

bool monomial_divides(Monomial small, Monomial big) {
  for (int v = 0; v < kNumVars; ++v)
    if (exponent_of(small, Var(v)) > exponent_of(big, Var(v))) return false;
  return true;
}

Monomial monomial_mul(Monomial a, Monomial b) {
  for (int v = 0; v < kNumVars; ++v)
    if (exponent_of(a, Var(v)) + exponent_of(b, Var(v)) > kMaxExponent)
      throw Error(ErrorKind::SizeBudgetExceeded, "polynomial exponent overflow");
  return a + b;
}

}  // namespace

Monomial make_monomial(std::initializer_list<std::pair<Var, int>> powers) {
  Monomial m = 0;
  for (auto [v, e] : powers) {
    if (e < 0 || e > kMaxExponent) throw Error(ErrorKind::InvalidInput, "exponent out of range");
    m = monomial_mul(m, static_cast<Monomial>(e) << var_shift(v));
  }
  return m;
}

MPoly::MPoly(const Int& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

MPoly MPoly::var(Var v, int power) { return term(make_monomial({{v, power}}), Int(1)); }

MPoly MPoly::term(Monomial m, Int c) {
  MPoly p;
  if (c != 0) p.terms_.emplace_back(m, std::move(c));
  return p;
}

Int MPoly::constant_value() const {
  if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
  return Int(0);
}

void MPoly::normalize_terms() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.second == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

int MPoly::degree_in(Var v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, exponent_of(t.first, v));
  return d;
}

MPoly MPoly::coefficient_of_x(int k) const {
  MPoly out;
  for (const auto& t : terms_)
    if (exponent_of(t.first, Var::X) == k)
      out.terms_.emplace_back(t.first - (static_cast<Monomial>(k) << var_shift(Var::X)), t.second);
  return out;  // stays sorted: removing a fixed x power preserves lex order
}

MPoly MPoly::derivative(Var v) const {
  MPoly out;
  const Monomial unit = static_cast<Monomial>(1) << var_shift(v);
  for (const auto& t : terms_) {
    const int e = exponent_of(t.first, v);
    if (e == 0) continue;
    out.terms_.emplace_back(t.first - unit, t.second * e);
  }
  out.normalize_terms();
  return out;
}

Int MPoly::content() const {
  Int g = 0;
  for (const auto& t : terms_) g = gcd_int(g, t.second);
  return g;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Int c = a.terms_[i].second + b.terms_[j].second;
      if (c != 0) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

MPoly operator-(const MPoly& a) {
  MPoly out = a;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.terms_.emplace_back(monomial_mul(x.first, y.first), x.second * y.second);
  out.normalize_terms();
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MPoly MPoly::scaled(const Int& c) const {
  if (c == 0) return MPoly();
  MPoly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

MPoly MPoly::exact_div(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "polynomial division by zero");
  MPoly quotient, rem = a;
  const auto& lead = b.terms_.back();
  while (!rem.is_zero()) {
    const auto& top = rem.terms_.back();
    if (!monomial_divides(lead.first, top.first) || !dynorb::divides(lead.second, top.second))
      throw Error(ErrorKind::InvalidInput, "polynomial division is not exact");
    MPoly q = term(top.first - lead.first, divexact(top.second, lead.second));
    rem = rem - q * b;
    quotient = quotient + q;
  }
  return quotient;
}

bool MPoly::divides(const MPoly& a) const {
  try {
    (void)exact_div(a, *this);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Rational MPoly::evaluate(const std::array<Rational, kNumVars>& values) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.second;
    for (int k = 0; k < kNumVars; ++k) {
      const int e = exponent_of(t.first, Var(k));
      for (int i = 0; i < e; ++i) v *= values[k];
    }
    total += v;
  }
  total.canonicalize();
  return total;
}

Int MPoly::evaluate_int(const std::array<Int, kNumVars>& values) const {
  Int total = 0;
  for (const auto& t : terms_) {
    Int v = t.second;
    for (int k = 0; k < kNumVars; ++k) {
      const int e = exponent_of(t.first, Var(k));
      if (e) v *= pow_int(values[k], static_cast<unsigned long>(e));
    }
    total += v;
  }
  return total;
}

MPoly MPoly::substitute(Var v, const Int& value) const {
  MPoly out;
  const int shift = var_shift(v);
  for (const auto& t : terms_) {
    const int e = exponent_of(t.first, v);
    out.terms_.emplace_back(t.first - (static_cast<Monomial>(e) << shift),
                            t.second * pow_int(value, static_cast<unsigned long>(e)));
  }
  out.normalize_terms();
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    std::string mono;
    for (Var v : {Var::R, Var::S, Var::T, Var::F, Var::X}) {
      const int e = exponent_of(it->first, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[static_cast<int>(v)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const bool negative = c < 0;
    const Int mag = abs_int(c);
    if (negative)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mono.empty())
      out += dynorb::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += dynorb::to_string(mag) + "*" + mono;
  }
  return out;
}

std::vector<MPoly> split_by_x(const MPoly& p, int degree) {
  if (p.degree_in(Var::X) > degree)
    throw Error(ErrorKind::InvalidInput, "polynomial exceeds the requested degree in x");
  std::vector<MPoly> out;
  out.reserve(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) out.push_back(p.coefficient_of_x(k));
  return out;
}

MPoly join_by_x(const std::vector<MPoly>& coeffs) {
  MPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out += coeffs[k] * MPoly::var(Var::X, static_cast<int>(k));
  return out;
}

}  // namespace dynorb

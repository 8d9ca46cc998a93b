#pragma once

// Generic dense polynomial and matrix routines over an integral domain R.
// A ring plugs in by specializing RingOps<R>; see the Int specialization
// below, MPoly (mpoly.hpp) and FFPoly (function_field.hpp).

#include <cstddef>
#include <utility>
#include <vector>

#include "dynorb/integer.hpp"

namespace dynorb {

template <class R>
struct RingOps;

template <>
struct RingOps<Int> {
  static Int zero(const Int&) { return Int(0); }
  static Int one(const Int&) { return Int(1); }
  static Int from_int(const Int&, long v) { return Int(v); }
  static bool is_zero(const Int& x) { return x == 0; }
  static Int exact_div(const Int& a, const Int& b) { return divexact(a, b); }
};

namespace alg {

// Coefficient vector, index i holds the coefficient of x^i. For a binary form
// of degree d the same vector (length d + 1) holds the coefficient of
// X^i Y^(d-i) at index i.
template <class R>
using Poly = std::vector<R>;

template <class R>
using Matrix = std::vector<std::vector<R>>;

template <class R>
bool is_zero_poly(const Poly<R>& p) {
  for (const auto& c : p)
    if (!RingOps<R>::is_zero(c)) return false;
  return true;
}

// Degree of a univariate polynomial, -1 for the zero polynomial.
template <class R>
int degree(const Poly<R>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!RingOps<R>::is_zero(p[i])) return i;
  return -1;
}

template <class R>
void trim(Poly<R>& p) {
  while (!p.empty() && RingOps<R>::is_zero(p.back())) p.pop_back();
}

template <class R>
Poly<R> pad(Poly<R> p, std::size_t length, const R& like) {
  while (p.size() < length) p.push_back(RingOps<R>::zero(like));
  return p;
}

template <class R>
Poly<R> add(const Poly<R>& a, const Poly<R>& b) {
  const Poly<R>& longer = a.size() >= b.size() ? a : b;
  const Poly<R>& shorter = a.size() >= b.size() ? b : a;
  Poly<R> out = longer;
  for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = out[i] + shorter[i];
  return out;
}

template <class R>
Poly<R> negate(const Poly<R>& a) {
  Poly<R> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(-c);
  return out;
}

template <class R>
Poly<R> sub(const Poly<R>& a, const Poly<R>& b) {
  return add(a, negate(b));
}

template <class R>
Poly<R> scale(const Poly<R>& a, const R& s) {
  Poly<R> out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c * s);
  return out;
}

template <class R>
Poly<R> mul(const Poly<R>& a, const Poly<R>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<R> out(a.size() + b.size() - 1, RingOps<R>::zero(a[0]));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (RingOps<R>::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (RingOps<R>::is_zero(b[j])) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

template <class R>
Poly<R> power(const Poly<R>& a, unsigned exponent, const R& like) {
  Poly<R> result{RingOps<R>::one(like)};
  Poly<R> base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

template <class R>
Poly<R> derivative(const Poly<R>& a) {
  if (a.size() <= 1) return {};
  Poly<R> out;
  out.reserve(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    out.push_back(a[i] * RingOps<R>::from_int(a[i], static_cast<long>(i)));
  return out;
}

// Evaluates the binary form sum c_i X^i Y^(d-i) at (x, y).
template <class R, class S>
S eval_form(const Poly<R>& form, const S& x, const S& y) {
  // Homogeneous Horner: ((c_d x + c_{d-1} y) x + c_{d-2} y^2) ...
  const std::size_t d = form.size() - 1;
  S acc = S(form[d]);
  S ypow = y;
  for (std::size_t k = 1; k <= d; ++k) {
    acc = acc * x + S(form[d - k]) * ypow;
    if (k < d) ypow = ypow * y;
  }
  return acc;
}

// Substitutes the pair of degree-e forms (f, g) into the degree-d form F,
// producing the degree d*e form F(f, g) = sum c_i f^i g^(d-i).
template <class R>
Poly<R> compose_form(const Poly<R>& outer, const Poly<R>& f, const Poly<R>& g) {
  const std::size_t d = outer.size() - 1;
  const std::size_t e = f.size() - 1;
  const R& like = outer[0];
  std::vector<Poly<R>> fpow{Poly<R>{RingOps<R>::one(like)}};
  std::vector<Poly<R>> gpow{Poly<R>{RingOps<R>::one(like)}};
  for (std::size_t i = 1; i <= d; ++i) {
    fpow.push_back(mul(fpow.back(), f));
    gpow.push_back(mul(gpow.back(), g));
  }
  Poly<R> out(d * e + 1, RingOps<R>::zero(like));
  for (std::size_t i = 0; i <= d; ++i) {
    if (RingOps<R>::is_zero(outer[i])) continue;
    Poly<R> term = mul(fpow[i], gpow[d - i]);
    for (std::size_t k = 0; k < term.size(); ++k)
      out[k] = out[k] + outer[i] * term[k];
  }
  return out;
}

// Sylvester matrix of two binary forms of the same formal degree d >= 1,
// rows ordered F-shifts first, coefficients listed from X^d down to Y^d.
template <class R>
Matrix<R> sylvester(const Poly<R>& F, const Poly<R>& G) {
  const std::size_t d = F.size() - 1;
  const std::size_t n = 2 * d;
  const R zero = RingOps<R>::zero(F[0]);
  Matrix<R> m(n, std::vector<R>(n, zero));
  for (std::size_t row = 0; row < d; ++row)
    for (std::size_t k = 0; k <= d; ++k) {
      m[row][row + k] = F[d - k];
      m[row + d][row + k] = G[d - k];
    }
  return m;
}

// Fraction-free Gaussian elimination (Bareiss). Every division is exact in an
// integral domain.
template <class R>
R determinant(Matrix<R> m, const R& like) {
  const std::size_t n = m.size();
  if (n == 0) return RingOps<R>::one(like);
  bool negate_result = false;
  R prev = RingOps<R>::one(like);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (RingOps<R>::is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && RingOps<R>::is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return RingOps<R>::zero(like);
      std::swap(m[k], m[swap_row]);
      negate_result = !negate_result;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = RingOps<R>::exact_div(num, prev);
      }
      m[i][k] = RingOps<R>::zero(like);
    }
    prev = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate_result ? R(-det) : det;
}

template <class R>
R resultant(const Poly<R>& F, const Poly<R>& G) {
  return determinant(sylvester(F, G), F[0]);
}

template <class R>
Matrix<R> drop_row_col(const Matrix<R>& m, std::size_t row, std::size_t col) {
  Matrix<R> out;
  out.reserve(m.size() - 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == row) continue;
    std::vector<R> r;
    r.reserve(m.size() - 1);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != col) r.push_back(m[i][j]);
    out.push_back(std::move(r));
  }
  return out;
}

// Forms p, q of degree d-1 with p*F + q*G = res * X^(2d-1) (target_x) or
// res * Y^(2d-1), where res = resultant(F, G) != 0. Solved by Cramer's rule on
// the linear system (p, q) -> p*F + q*G, whose determinant is +-res, so the
// solution is integral over R.
template <class R>
std::pair<Poly<R>, Poly<R>> bezout_cofactors(const Poly<R>& F, const Poly<R>& G,
                                             const R& res, bool target_x) {
  const std::size_t d = F.size() - 1;
  const std::size_t n = 2 * d;
  const R& like = F[0];
  // Column j < d: p coefficient of X^j Y^(d-1-j); column d + j: q's.
  // Row k: coefficient of X^k Y^(2d-1-k) in p*F + q*G.
  Matrix<R> m(n, std::vector<R>(n, RingOps<R>::zero(like)));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i <= d; ++i) {
      m[i + j][j] = F[i];
      m[i + j][d + j] = G[i];
    }
  const R det = determinant(m, like);
  const std::size_t target = target_x ? n - 1 : 0;
  Poly<R> p(d, RingOps<R>::zero(like));
  Poly<R> q(d, RingOps<R>::zero(like));
  for (std::size_t col = 0; col < n; ++col) {
    // x_col = res * adj(m)[col][target] / det
    R minor = determinant(drop_row_col(m, target, col), like);
    if ((target + col) % 2 == 1) minor = -minor;
    R value = RingOps<R>::exact_div(minor * res, det);
    if (col < d)
      p[col] = value;
    else
      q[col - d] = value;
  }
  return {std::move(p), std::move(q)};
}

}  // namespace alg
}  // namespace dynorb

#include "dynorb/point.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dynorb/error.hpp"
#include "dynorb/parallel.hpp"

namespace dynorb {

ProjPoint normalize(Int a, Int b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::BothZero, "normalize: (0, 0) is not a point of P^1");
  if (b == 0) return ProjPoint(Int(1), Int(0));
  Int g = gcd_int(a, b);
  if (g != 1) {
    a = divexact(a, g);
    b = divexact(b, g);
  }
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return ProjPoint(std::move(a), std::move(b));
}

ProjPoint normalize_coprime(Int a, Int b) {
  if (b == 0) return ProjPoint(Int(1), Int(0));
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return ProjPoint(std::move(a), std::move(b));
}

HeightValue weil_height(const ProjPoint& p) {
  HeightValue h;
  h.mult = height_mult(p);
  h.log = static_cast<double>(log_abs(h.mult));
  return h;
}

std::strong_ordering height_order(const ProjPoint& x, const ProjPoint& y) {
  const int hc = cmp(height_mult(x), height_mult(y));
  if (hc != 0) return hc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int ac = cmp(x.a(), y.a());
  if (ac != 0) return ac < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int bc = cmp(x.b(), y.b());
  if (bc != 0) return bc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t PointHash::operator()(const ProjPoint& p) const {
  auto limb = [](const Int& v) -> std::size_t {
    const mpz_srcptr z = v.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(z->_mp_size);
    const int n = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < n && i < 4; ++i) h = h * 0x9E3779B97F4A7C15ull + z->_mp_d[i];
    return h;
  };
  return limb(p.a()) * 31u + limb(p.b());
}

SIntSpec::SIntSpec(std::vector<Int> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_probable_prime(primes_[i]))
      throw Error(ErrorKind::InvalidInput, "S contains non-prime " + dynorb::to_string(primes_[i]));
    if (i > 0 && primes_[i] == primes_[i - 1])
      throw Error(ErrorKind::InvalidInput, "S lists prime " + dynorb::to_string(primes_[i]) + " twice");
  }
}

Int SIntSpec::strip(Int n) const {
  if (n == 0) return n;
  for (const Int& p : primes_)
    while (divides(p, n)) n = divexact(n, p);
  return n;
}

SIntSpec SIntSpec::parse(std::string_view text) {
  std::vector<Int> primes;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
    if (item.empty()) continue;
    primes.push_back(parse_int(item));
  }
  return SIntSpec(std::move(primes));
}

std::string SIntSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ",";
    out += dynorb::to_string(primes_[i]);
  }
  return out;
}

bool is_s_integral(const ProjPoint& p, const SIntSpec& s) {
  if (p.is_infinity()) return false;
  if (p.b() == 1) return true;
  return s.strip(p.b()) == 1;
}

std::vector<ProjPoint> enumerate_points(const Int& bound, unsigned workers) {
  if (bound < 1) return {};
  if (!bound.fits_slong_p() || bound > 2'000'000)
    throw Error(ErrorKind::InvalidInput, "enumerate_points: bound too large for enumeration");
  const long B = bound.get_si();
  // One slot per denominator; denominators 1..B plus the point at infinity.
  std::vector<std::vector<ProjPoint>> by_den(static_cast<std::size_t>(B));
  parallel_for(by_den.size(), workers, [&](std::size_t idx) {
    const long b = static_cast<long>(idx) + 1;
    auto& out = by_den[idx];
    for (long a = -B; a <= B; ++a) {
      if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
      out.push_back(normalize(Int(a), Int(b)));
    }
  });
  std::vector<ProjPoint> all;
  all.push_back(ProjPoint::infinity());
  for (auto& v : by_den)
    for (auto& p : v) all.push_back(std::move(p));
  std::sort(all.begin(), all.end(), [](const ProjPoint& x, const ProjPoint& y) {
    return height_order(x, y) == std::strong_ordering::less;
  });
  return all;
}

Int count_points(long bound) {
  if (bound < 1) return Int(0);
  // Points of exact height m >= 2: b = m with |a| < m coprime to m, or
  // |a| = m with 1 <= b < m coprime to m; 4 * phi(m) in total.
  std::vector<long> phi(static_cast<std::size_t>(bound) + 1);
  for (long i = 0; i <= bound; ++i) phi[i] = i;
  for (long i = 2; i <= bound; ++i)
    if (phi[i] == i)
      for (long j = i; j <= bound; j += i) phi[j] -= phi[j] / i;
  Int total = 1;  // infinity
  total += 3;     // 0/1, 1/1, -1/1
  for (long m = 2; m <= bound; ++m) total += 4 * phi[m];
  return total;
}

std::string format_point(const ProjPoint& p) {
  if (p.is_infinity()) return "inf";
  if (p.b() == 1) return dynorb::to_string(p.a());
  return dynorb::to_string(p.a()) + "/" + dynorb::to_string(p.b());
}

ProjPoint parse_point(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s == "inf") return ProjPoint::infinity();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return normalize(parse_int(s), Int(1));
  return normalize(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace dynorb

#include "dynorb/integer.hpp"

#include <cmath>
#include <string>

#include "dynorb/error.hpp"

namespace dynorb {

Int parse_int(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::InvalidInput, "empty integer literal '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw Error(ErrorKind::InvalidInput, "bad integer literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

long double log_abs(const Int& x) {
  Int m = abs_int(x);
  const std::size_t bits = bit_length(m);
  long shift = 0;
  if (bits > 64) {
    shift = static_cast<long>(bits - 64);
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  }
  // m now fits in 64 bits and converts exactly.
  unsigned long long hi = 0;
  Int top = m >> 32;
  Int low = m - (top << 32);
  hi = (static_cast<unsigned long long>(top.get_ui()) << 32) | low.get_ui();
  return std::log(static_cast<long double>(hi)) +
         static_cast<long double>(shift) * std::log(2.0L);
}

bool is_probable_prime(const Int& x) {
  return x >= 2 && mpz_probab_prime_p(x.get_mpz_t(), 40) != 0;
}

}  // namespace dynorb

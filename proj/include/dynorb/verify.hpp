#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dynorb/verification.hpp"

namespace dynorb {

struct VerifyOptions {
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

// Random maps of degree 2..4 with coefficients in [-9, 9]: both cofactor
// identities, and gcd(F(a,b), G(a,b)) | R at random coprime pairs.
VerificationReport cofactor_checks(std::uint64_t seed, int maps = 50, int pairs = 100);

// hhat_{x^2}(2) = ln 2, and |hhat(phi P) - d hhat(P)| <= (d+1) tol on random
// (map, P) with d in {2, 3, 4}.
VerificationReport canonical_height_checks(std::uint64_t seed, int samples = 50, double tol = 1e-6);

// is_preperiodic against a plain orbit table on every P with H(P) <= bound
// for x^2, x^2 - 1 and x^4/(x^2-2)^2.
VerificationReport preperiodicity_checks(long bound, unsigned workers = 1);

// Brute-force count of P^1(Q) points of height <= B against count_points and
// 12/pi^2 B^2 (relative error < 5%).
VerificationReport schanuel_check(long bound);

// 20 random non-constant f over F_2 and F_3 (d alternating 2, 3): the full
// family check bundle; plus isotrivial constants and degree-height bounds.
VerificationReport ff_checks(std::uint64_t seed, int count = 20);

struct RegisteredCheck {
  std::string module;
  std::string function;  // public check function it runs
  std::function<VerificationReport(const VerifyOptions&)> run;
};

const std::vector<RegisteredCheck>& verify_registry();
VerificationReport run_verify(const VerifyOptions& options);

}  // namespace dynorb

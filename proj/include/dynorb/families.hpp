#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dynorb/family_spec.hpp"
#include "dynorb/orbit.hpp"
#include "dynorb/rational_map.hpp"
#include "dynorb/verification.hpp"

namespace dynorb {

// Presets, built coefficient by coefficient.
FamilySpec phi_t_family();        // (x - t)/(x^3 + 1)
FamilySpec three_param_family();  // (r s x^3 + s x + t)/(x^2 + 1)
FamilySpec pell_family(const Int& D);  // x^4/(x^2 - D)^2, arity 0

// Evaluates the coefficients, clears denominators and calls make_map, so
// DegenerateMap / DegreeDrop report parameters outside Rat_d.
RationalMap specialize(const FamilySpec& family, const std::vector<Rational>& params);

// Integer forms of the family at integer parameters, without content
// reduction or sign changes.
std::pair<std::vector<Int>, std::vector<Int>> specialize_forms(const FamilySpec& family,
                                                               const std::vector<Int>& params);

// specialize succeeds and the second iterate is not a polynomial.
bool i_membership(const FamilySpec& family, const std::vector<Rational>& params);

// Homogeneous forms of the n-th iterate with polynomial coefficients in the
// parameters (no content removal).
struct SymbolicForms {
  std::vector<MPoly> num, den;
};
SymbolicForms symbolic_iterate(const FamilySpec& family, unsigned n);
MPoly symbolic_resultant(const SymbolicForms& forms);

// Second iterate and its resultant against the closed forms.
VerificationReport phi_t_identities();

// Symbolic resultant over Z[t] of the second iterate equals
// (t+1)^12 (t^2-t+1)^12.
VerificationReport phi_t_symbolic_resultant();

// Symbolic resultant of the n-th iterate evaluated at each sample equals the
// Sylvester determinant of the specialized forms. Degree-dropping samples
// are skipped and noted.
VerificationReport resultant_specialization_check(const FamilySpec& family, unsigned level,
                                                  const std::vector<std::vector<Int>>& samples);

struct CubeSumResult {
  std::size_t solutions = 0;
  std::size_t violations = 0;
};
// Every x^3 + y^3 = B != 0 with |x|, |y| <= limit has max(|x|,|y|) <= 2 sqrt|B|.
CubeSumResult cube_sum_check(long limit);

// Cube-sum sweep plus: for integer t with H(t) <= bound_t, every b with
// H(b) <= 4 H(t)^2 and phi_t(b) integral has H(b) <= 2 sqrt(2) H(t)^(3/2).
VerificationReport preimage_height_bound_check(long bound_t, unsigned workers = 1);

bool is_squarefree(const Int& n);
inline constexpr long kPellSearchLimit = 10'000'000;
// Smallest positive (u, v) with u^2 - D v^2 = 1, searching v up to the limit.
std::pair<Int, Int> fundamental_pell(const Int& D);
std::vector<std::pair<Int, Int>> pell_stream(const Int& D, std::size_t count);
RationalMap pell_map(const Int& D);
VerificationReport pell_checks(const Int& D, std::size_t count);

// Population over finite t with H(t) <= B (the point at infinity is left
// out); parameters outside I are excluded and counted.
struct AvgRow {
  long b = 0;
  std::size_t population = 0;
  std::size_t excluded = 0;
  std::size_t total = 0;
  std::size_t truncated = 0;
  double average = 0;
};
struct AvgReport {
  std::vector<AvgRow> rows;
};

// family: arity 0 (one map) or 1; beta is a rational function of the
// family's parameter (t for a single map).
AvgReport avg_experiment(const FamilySpec& family, const BasepointSpec& beta, const SIntSpec& s,
                         const std::vector<long>& b_values, const OrbitPolicy& policy = {},
                         unsigned workers = 1);

// A rational function num/den in x reduced to lowest terms: either a map of
// degree >= 1 or a constant.
struct ReducedFunction {
  std::optional<RationalMap> map;
  Rational constant;
};
ReducedFunction reduce_rational_function(std::vector<Int> num, std::vector<Int> den);

// Orbit of b under a reduced function; constants give {b, c}.
OrbitRecord scan_reduced(const ReducedFunction& f, const ProjPoint& b, const SIntSpec& s,
                         const OrbitPolicy& policy);

struct SliceTally {
  std::size_t points = 0;
  std::size_t total = 0;
  std::size_t max_count = 0;
  std::size_t violations = 0;
  std::size_t truncated = 0;
};
struct ThreeParamRow {
  long b = 0;
  std::size_t boxes = 0;  // (2B + 1)^3
  std::size_t total = 0;
  double average = 0;
  SliceTally t0, s0, r0, open;
};
struct ThreeParamReport {
  int n1 = 0, n2 = 0, n3 = 0;
  std::vector<ThreeParamRow> rows;
};

// Integer triples |r|,|s|,|t| <= B, beta = r^n1 s^n2 t^n3, maps reduced to
// lowest terms. Slices are disjoint: t = 0; s = 0 (t != 0); r = 0 (s t != 0);
// open cell r s t != 0.
ThreeParamReport three_param_avg(int n1, int n2, int n3, const std::vector<long>& b_values,
                                 const OrbitPolicy& policy = {}, unsigned workers = 1);

// Structural identities of the 3-parameter family: second-iterate leading
// coefficients, polynomial cells and their orbits.
VerificationReport three_param_identities();

}  // namespace dynorb

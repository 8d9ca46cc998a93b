#pragma once

#include <optional>

#include "dynorb/point.hpp"
#include "dynorb/rational_map.hpp"

namespace dynorb {

// d*h(P) - c_low <= h(phi(P)) <= d*h(P) + c_up for every P in P^1(Q).
struct TransitionConstants {
  double c_up = 0;   // h(phi) + ln(d + 1)
  double c_low = 0;  // ln(2 d M), M = largest cofactor coefficient
};

TransitionConstants transition_constants(const RationalMap& map);

// |value - hhat(P)| <= radius.
struct CanonicalHeightEstimate {
  double value = 0;
  double radius = 0;
  unsigned iterations_used = 0;
};

inline constexpr double kMinCanonicalTolerance = 1e-12;

// Certified estimate of lim h(phi^n P) / d^n with radius <= tol. Needs d >= 2
// and tol >= kMinCanonicalTolerance (Error(Precondition) otherwise).
CanonicalHeightEstimate canonical_height(const RationalMap& map, const ProjPoint& p, double tol);

// Exact orbit iteration under the certified ceiling
// h <= (c_up + c_low) / (d - 1) + 1 that every preperiodic orbit respects.
bool is_preperiodic(const RationalMap& map, const ProjPoint& p);
bool is_preperiodic(const RationalMap& map, const ProjPoint& p, const TransitionConstants& tc);

struct HhatMin {
  double value = 0;  // max(0, estimate - radius), minimized
  ProjPoint witness;
  CanonicalHeightEstimate estimate;
};

// Minimum over wandering P with H(P) <= bound; empty when every such point is
// preperiodic. Ties go to the witness earliest in height order.
std::optional<HhatMin> hhat_min_empirical(const RationalMap& map, const Int& bound, double tol,
                                          unsigned workers = 1);

}  // namespace dynorb

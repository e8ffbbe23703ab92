#pragma once

#include <vector>

#include "ttw/orbit.hpp"

namespace ttw {

// A candidate singular point of the orbit curve: a radius where dT_m/dR
// vanishes paired with an angle where the branch bracket vanishes. The curve
// has a genuine node there iff the pair also satisfies the orbit equation,
// recorded in on_trajectory.
struct SingularPoint {
  double r = 0.0;
  double phi = 0.0;    // representative angle in sector 0
  double Rstar = 0.0;  // critical value of the radial transform
  bool on_trajectory = false;
};

// Closure measurements of a numerically integrated trajectory.
struct ClosureReport {
  double period_estimate = 0.0;  // full-state recurrence period (primary)
  double radial_period = 0.0;    // period of r(t), sine-law cross-check
  double closure_gap = 0.0;      // max componentwise gap of state(t + pi/(2 omega))
  double k_period_angle = 0.0;   // measured angular period tau = pi / k_measured
  int n_singular = 0;            // on-trajectory singular points of the fitted orbit
};

enum class DegenerateClass { GenericClosed, Segment, Circle, HarmonicLimit, Unbounded };

const char* degenerate_name(DegenerateClass c) noexcept;

// Enumerates the singular-point candidates R* = cos(j pi / m), j = 1..m-1,
// with angles from T_n(U) = +-cos C, and tests each pair against the orbit
// equation (both branches) at 1e-8. Returns every candidate; k = 1 (or any
// m = 1) has none.
std::vector<SingularPoint> singular_points(const OrbitEquation& eq);

// Measures periods and closure on a trajectory spanning at least twice the
// radial period (dense output required). The primary period estimate is the
// first full-state recurrence; the radial period comes from successive
// maxima of r(t). Throws InsufficientSpan when the trajectory is too short.
ClosureReport measure_closure(const Trajectory& traj);

// Constants-level classification: the boundedness verdict refined by the
// segment test sin C = 0.
DegenerateClass classify_degenerate(const SystemParams& params,
                                    const MotionConstants& constants);

}  // namespace ttw

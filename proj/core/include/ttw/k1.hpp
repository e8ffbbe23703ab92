#pragma once

#include <utility>

#include "ttw/types.hpp"

namespace ttw {

// Constants of the separated cartesian motion at k = 1:
//   x^2(t) = (E1 + sqrt(E1^2 - 4 alpha omega^2) sin(4 omega t + C1)) / (2 omega^2)
// and likewise for y with (E2, beta, C2). C1, C2 are phases in radians and
// S = C1 - C2 is canonically taken in [0, pi].
struct CartesianConstants {
  double E1 = 0.0;  // x-motion energy
  double E2 = 0.0;  // y-motion energy, E1 + E2 = E
  double C1 = 0.0;  // x phase
  double C2 = 0.0;  // y phase

  double E() const noexcept { return E1 + E2; }
  double S() const noexcept;  // phase difference folded into [0, pi]
};

// Fig-1-style classification of a point of the (E1, A) plane.
enum class Region { I, II, III, IV, V, VI, OnCurve, OnDashed };

const char* region_name(Region r) noexcept;

struct RegionResult {
  Region region = Region::I;
  bool zero_over_zero = false;  // intersection of the dashed locus with the curve
};

struct K1MapResult {
  double A = 0.0;
  double cos_C = 0.0;
  Region region = Region::I;
};

// Validates 2 omega sqrt(alpha) <= E1 <= E - 2 omega sqrt(beta) and both
// oscillation radicands; throws InconsistentConstants otherwise.
void validate_cartesian(const CartesianConstants& cc, const SystemParams& params);

// Squared coordinates at time t. Requires omega > 0 and valid constants.
std::pair<double, double> cartesian_xy_of_t(const CartesianConstants& cc,
                                            const SystemParams& params, double t);

// Full cartesian state (x, y, p_x, p_y) at time t; momenta from the time
// derivative of the squared-coordinate laws.
struct CartesianState {
  double x = 0.0, y = 0.0, p_x = 0.0, p_y = 0.0;
};
CartesianState cartesian_state_of_t(const CartesianConstants& cc,
                                    const SystemParams& params, double t);

// The polar phase-space image of cartesian_state_of_t.
PhaseState polar_state_of_t(const CartesianConstants& cc, const SystemParams& params,
                            double t);

// The two branches of the quartic trajectory curve y^2(x); OutOfRectangle when
// x^2 leaves the admissible band of the x oscillation.
std::pair<double, double> cartesian_orbit_y2_of_x(const CartesianConstants& cc,
                                                  const SystemParams& params, double x);

// Map (E1, E2, S) -> (A, cos C). Throws DenominatorComplex when
// A < (sqrt(alpha) + sqrt(beta))^2 so the phase denominator turns imaginary;
// otherwise returns the raw cos C with the region classification attached.
K1MapResult constants_cartesian_to_polar(const CartesianConstants& cc,
                                         const SystemParams& params);

// Sign-based classification of an arbitrary (E1, A) point for total energy E:
// evaluates the cos^2 C = 1 quadratic and the dashed cos C = 0 locus.
RegionResult classify_region(double E1, double A, const SystemParams& params, double E);

// The cos^2 C = 1 quadratic in (E1, A); zero on the region boundary curve.
double region_boundary_value(double E1, double A, const SystemParams& params, double E);

}  // namespace ttw

#pragma once

#include <utility>

#include "ttw/types.hpp"

namespace ttw {

// Verdict of the bounded-motion analysis.
//   Bounded       strict inequalities hold; closed orbit inside one sector
//   Unbounded     no confinement (omega = 0) or no real motion region
//   Circle        E^2 = 4 omega^2 A, constant radius sqrt(E/2)/omega
//   Segment       angular interval degenerate, radial line segment
//   HarmonicLimit A = 0, pure oscillator limit
enum class Verdict { Bounded, Unbounded, Circle, Segment, HarmonicLimit };

const char* verdict_name(Verdict v) noexcept;

// Turning intervals and classification for given (params, E, A).
struct BoundsReport {
  double r2_min = 0.0;  // inner radial turning point, as r^2
  double r2_max = 0.0;  // outer radial turning point, as r^2
  double z_min = 0.0;   // lower root of the z = sin^2(k phi) quadratic
  double z_max = 0.0;   // upper root
  int sector = 0;       // index of the sector under analysis
  Verdict verdict = Verdict::Unbounded;

  bool bounded() const noexcept { return verdict == Verdict::Bounded; }
};

// Index n of the open sector n pi/(2k) < phi < (n+1) pi/(2k) containing phi.
// Throws BoundaryAngle if phi sits on a wall to within |sin 2k phi| < 1e-12:
// with both barriers positive a trajectory can never reach a wall, so a
// boundary hit signals a forbidden configuration.
int sector_of(double phi, const Rational& k);

// Radial turning points r_{1,2}^2 = (E -+ sqrt(E^2 - 4 omega^2 A)) / (2 omega^2).
// Throws ComplexRoots when the discriminant is negative.
std::pair<double, double> radial_bounds(double E, double A, double omega);

// Angular turning points: roots of A z^2 - (A - alpha k^2 + beta k^2) z + beta k^2.
// Throws ComplexRoots on a negative discriminant and OutOfUnitInterval when a
// root leaves [0, 1].
std::pair<double, double> angular_bounds(double A, double alpha, double beta,
                                         const Rational& k);

// Discriminant of the angular quadratic, (A - alpha k^2 + beta k^2)^2 - 4 A beta k^2.
// Algebraically equal to [A - (alpha+beta) k^2]^2 - 4 alpha beta k^4.
double angular_discriminant(double A, double alpha, double beta, double k);

// Evaluates every bounded-motion inequality and classifies the constants.
// Equality cases route to the named degenerate verdicts; anything without a
// real motion region is Unbounded. Never throws: every outcome is a verdict.
BoundsReport check_boundedness(const SystemParams& params, double E, double A);

}  // namespace ttw

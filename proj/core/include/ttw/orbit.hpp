#pragma once

#include <span>
#include <vector>

#include "ttw/bounds.hpp"
#include "ttw/types.hpp"

namespace ttw {

// Sign of the square-root term in the algebraic orbit relation
//   T_m(R) = T_n(U) cos C + (+-) sqrt(1 - T_n(U)^2) sin C,  k = m/n.
enum class Branch { plus, minus };

inline Branch other(Branch b) noexcept {
  return b == Branch::plus ? Branch::minus : Branch::plus;
}

// An algebraic orbit: bounded constants plus the phase constant C in [0, pi]
// and a primary branch sign. The full closed curve is the union of both
// branch curves; they join at the angular turning points.
struct OrbitEquation {
  SystemParams params;
  MotionConstants constants;
  Branch branch = Branch::plus;
  BoundsReport bounds;  // cached turning intervals (verdict Bounded or Circle-free)

  long long m() const noexcept { return params.k.num(); }
  long long n() const noexcept { return params.k.den(); }
};

// Validates Bounded constants and C in [0, pi], caches the turning intervals.
OrbitEquation make_orbit_equation(const SystemParams& params,
                                  const MotionConstants& constants,
                                  Branch branch = Branch::plus);

// Radial transform R = (-2A + E r^2) / (r^2 sqrt(E^2 - 4 omega^2 A)).
// Maps [r1^2, r2^2] onto [-1, 1]; OutOfAnnulus beyond tolerance.
double R_of_r(double r, double E, double A, double omega);

// Inverse transform r = sqrt(2A / (E - R sqrt(E^2 - 4 omega^2 A))).
double r_of_R(double R, double E, double A, double omega);

// Angular transform U = (-2A sin^2(k phi) + A - (alpha - beta) k^2) / sqrt(disc),
// with the discriminant of the angular quadratic. Maps the angular band onto
// [-1, 1] (U = +1 at z1, -1 at z2); OutOfAngularRange beyond tolerance.
double U_of_phi(double phi, const SystemParams& params, double A);

// Right-hand side T_n(U(phi)) cos C + s sqrt(1 - T_n(U)^2) sin C; always in [-1, 1].
double orbit_rhs(const OrbitEquation& eq, double phi, Branch branch);

// Signed residual T_m(R(r)) - rhs(phi). A single trajectory changes branch
// where the square root vanishes, so the value returned is the branch with
// the smaller magnitude; zero (to tolerance) iff the point is on the orbit.
double orbit_residual(const OrbitEquation& eq, double r, double phi);

// Residual on one fixed branch.
double orbit_residual_branch(const OrbitEquation& eq, double r, double phi, Branch b);

// All radii at angle phi on the equation's branch, ascending. Real roots R of
// T_m(R) = rhs(phi) found trigonometrically and mapped through r_of_R;
// generically there are exactly m of them. NoRealRoot if sin^2(k phi) is
// outside the angular band.
std::vector<double> solve_r_at_phi(const OrbitEquation& eq, double phi);

struct OrbitSample {
  double phi = 0.0;
  double r = 0.0;
  int root_index = 0;
  Branch branch = Branch::plus;
};

// Densely samples the closed curve of one root index over the angular band of
// sector 0: a forward sweep on branch plus joined to a backward sweep on
// branch minus, forming a closed polygon (the branches meet at the band
// edges). n_samples angles per branch.
std::vector<OrbitSample> sample_orbit(const OrbitEquation& eq, int root_index,
                                      int n_samples);

// Radial time law r^2(t) = (E + sqrt(E^2 - 4 omega^2 A) sin[4 omega (t + delta1)])
// / (2 omega^2); exactly periodic with period pi / (2 omega).
double r2_of_t(double E, double A, double omega, double delta1, double t);

// Free (omega = 0) law r^2(t) = (A + 4 E^2 (t + delta1)^2) / E.
double r2_of_t_free(double E, double A, double delta1, double t);

// Radial phase constant delta1 recovered from a state by inverting the time
// law; the arcsine branch follows the sign of d(r^2)/dt = 4 r p_r.
double fit_delta1(const PhaseState& state, double E, double A, double omega);

// Recover (C, branch) from a state known to lie on an orbit with constants
// (E, A). Probes (later trajectory points) disambiguate the branch and the
// two phase candidates; delta1 is fitted as well.
OrbitEquation fit_orbit_equation(const SystemParams& params, double E, double A,
                                 const PhaseState& initial,
                                 std::span<const PhaseState> probes = {});

}  // namespace ttw

#pragma once

#include <cstddef>
#include <vector>

#include "ttw/errors.hpp"
#include "ttw/rational.hpp"

namespace ttw {

// Physical constants of the deformed oscillator
//   H = p_r^2 + p_phi^2/r^2 + omega^2 r^2
//       + k^2 (alpha / cos^2(k phi) + beta / sin^2(k phi)) / r^2.
// Note the kinetic normalization H = p^2 (no 1/2): velocities carry a
// factor 2, and the radial period for bounded motion is pi/(2 omega).
struct SystemParams {
  double omega = 1.0;  // confining frequency, >= 0 (0 only for escape analysis)
  double alpha = 0.0;  // cos-wall barrier strength, >= 0
  double beta = 0.0;   // sin-wall barrier strength, >= 0
  Rational k{1, 1};    // deformation parameter m/n, exact

  void validate() const {
    if (omega < 0.0) throw Error(Errc::invalid_argument, "omega must be >= 0");
    if (alpha < 0.0) throw Error(Errc::invalid_argument, "alpha must be >= 0");
    if (beta < 0.0) throw Error(Errc::invalid_argument, "beta must be >= 0");
  }

  double k_value() const noexcept { return k.value(); }
  // Radial period of bounded motion, pi/(2 omega).
  double radial_period() const { return 3.14159265358979323846 / (2.0 * omega); }
};

// Values of the two classical integrals plus the phase constants of the
// closed-form trajectory machinery. C is the phase constant of the
// algebraic orbit relation, canonicalized to [0, pi] (C and 2 pi - C trace
// the same point set). delta1 is the radial time-phase constant.
struct MotionConstants {
  double E = 0.0;       // energy, value of H
  double A = 0.0;       // value of the angular integral X_k
  double C = 0.0;       // orbit phase constant in [0, pi]
  double delta1 = 0.0;  // radial time phase
};

// A point of the polar phase space with its time stamp.
struct PhaseState {
  double t = 0.0;
  double r = 0.0;
  double phi = 0.0;
  double p_r = 0.0;
  double p_phi = 0.0;
};

// Conserved-quantity values recorded alongside a trajectory sample.
struct ConservedPair {
  double H = 0.0;
  double X = 0.0;
};

// One accepted integrator step with the dense-output coefficients needed to
// interpolate the solution anywhere inside [t0, t0 + h].
struct DenseSegment {
  double t0 = 0.0;
  double h = 0.0;
  // Contiguous interpolation coefficients, 5 per component of (r, phi, p_r, p_phi).
  double rcont[5][4] = {};
};

// Time-ordered result of a numerical integration. Samples are the accepted
// steps; dense segments (when recorded) allow evaluation at arbitrary times
// at the integrator's own accuracy.
struct Trajectory {
  SystemParams params;
  std::vector<PhaseState> samples;
  std::vector<ConservedPair> conserved;  // one entry per sample
  std::vector<DenseSegment> dense;       // empty unless dense output was requested

  double max_H_drift = 0.0;  // max |H - H0| / |H0| over the run
  double max_X_drift = 0.0;  // max |X - X0| / |X0| over the run

  double t_begin() const { return samples.front().t; }
  double t_end() const { return samples.back().t; }
  bool has_dense() const noexcept { return !dense.empty(); }

  // Interpolated state at time t (requires dense output, t within the span).
  PhaseState state_at(double t) const;
};

}  // namespace ttw

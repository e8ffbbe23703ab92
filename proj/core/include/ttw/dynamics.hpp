#pragma once

#include <optional>

#include "ttw/types.hpp"

namespace ttw {

// Time derivatives of the phase-space coordinates.
struct Derivatives {
  double r_dot = 0.0;
  double phi_dot = 0.0;
  double p_r_dot = 0.0;
  double p_phi_dot = 0.0;
};

enum class IntegratorMethod {
  adaptive_embedded_rk,   // Dormand-Prince 5(4) with dense output (default)
  fixed_step_symplectic,  // Stoermer-Verlet leapfrog in cartesian coordinates
};

struct IntegratorConfig {
  IntegratorMethod method = IntegratorMethod::adaptive_embedded_rk;
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  double max_step = 0.0;    // 0 means unlimited
  bool dense_output = true;
  double fixed_step = 1e-4; // used by the symplectic method only

  void validate() const {
    if (rel_tol <= 0.0 || abs_tol <= 0.0)
      throw Error(Errc::invalid_argument, "tolerances must be positive");
    if (max_step < 0.0) throw Error(Errc::invalid_argument, "max_step must be >= 0");
    if (fixed_step <= 0.0) throw Error(Errc::invalid_argument, "fixed_step must be > 0");
  }
};

// Energy H evaluated at a state. Throws SectorWall when a trigonometric
// denominator vanishes while the matching barrier constant is nonzero.
double hamiltonian(const PhaseState& state, const SystemParams& params);

// Value of the angular integral X = p_phi^2 + k^2 (alpha/cos^2 + beta/sin^2).
double xk_value(const PhaseState& state, const SystemParams& params);

// Hamilton's equations, analytic. With the H = p^2 normalization the
// velocities are r_dot = 2 p_r and phi_dot = 2 p_phi / r^2.
Derivatives eom(const PhaseState& state, const SystemParams& params);

// Integrate from `initial` to t_end. Records every accepted step (plus the
// conserved quantities and relative drift), and dense-output coefficients
// when requested. Throws StepFailure if the error controller underflows the
// minimum step and SectorWall if the state reaches a wall with a positive
// barrier (which cannot happen physically; it indicates integration failure).
Trajectory integrate(const PhaseState& initial, const SystemParams& params,
                     double t_end, const IntegratorConfig& config = {});

// Build a state on the invariant surface (H, X) = (E, A): p_phi and p_r are
// recovered from the two radicands with the requested signs. r0_sq defaults
// to the midpoint of the radial turning interval (or 2A/E when omega = 0).
// Throws InconsistentConstants when a radicand is negative.
PhaseState state_from_constants(const SystemParams& params, double E, double A,
                                double phi0, int sign_p_r = +1, int sign_p_phi = +1,
                                std::optional<double> r0_sq = std::nullopt);

}  // namespace ttw

#include "ttw/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ttw/chebyshev.hpp"

namespace ttw {

namespace {
constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x) { return std::min(1.0, std::max(-1.0, x)); }

double fold_phase(double c) {
  c = std::fmod(c, 2.0 * kPi);
  if (c < 0.0) c += 2.0 * kPi;
  if (c > kPi) c = 2.0 * kPi - c;
  return c;
}
}  // namespace

OrbitEquation make_orbit_equation(const SystemParams& params,
                                  const MotionConstants& constants, Branch branch) {
  OrbitEquation eq;
  eq.params = params;
  eq.constants = constants;
  eq.branch = branch;
  eq.bounds = check_boundedness(params, constants.E, constants.A);
  if (!eq.bounds.bounded())
    throw Error(Errc::inconsistent_constants,
                std::string("orbit equation requires Bounded constants, got ") +
                    verdict_name(eq.bounds.verdict));
  if (constants.C < -1e-12 || constants.C > kPi + 1e-12)
    throw Error(Errc::invalid_argument, "phase constant C must lie in [0, pi]");
  return eq;
}

double R_of_r(double r, double E, double A, double omega) {
  const double disc = E * E - 4.0 * omega * omega * A;
  if (disc <= 0.0)
    throw Error(Errc::complex_roots, "radial transform needs E^2 - 4 omega^2 A > 0");
  const double r2 = r * r;
  const double R = (-2.0 * A + E * r2) / (r2 * std::sqrt(disc));
  if (std::abs(R) > 1.0 + 1e-9)
    throw Error(Errc::out_of_annulus, "radius outside the turning interval");
  return clamp_unit(R);
}

double r_of_R(double R, double E, double A, double omega) {
  const double disc = E * E - 4.0 * omega * omega * A;
  if (disc <= 0.0)
    throw Error(Errc::complex_roots, "radial transform needs E^2 - 4 omega^2 A > 0");
  return std::sqrt(2.0 * A / (E - R * std::sqrt(disc)));
}

double U_of_phi(double phi, const SystemParams& params, double A) {
  const double kv = params.k_value();
  const double disc = angular_discriminant(A, params.alpha, params.beta, kv);
  if (disc <= 0.0)
    throw Error(Errc::complex_roots, "angular transform needs a positive discriminant");
  const double z = std::pow(std::sin(kv * phi), 2);
  const double U =
      (-2.0 * A * z + A - (params.alpha - params.beta) * kv * kv) / std::sqrt(disc);
  if (std::abs(U) > 1.0 + 1e-9)
    throw Error(Errc::out_of_angular_range, "angle outside the angular band");
  return clamp_unit(U);
}

double orbit_rhs(const OrbitEquation& eq, double phi, Branch branch) {
  const double U = U_of_phi(phi, eq.params, eq.constants.A);
  const double TnU = chebyshev_T(static_cast<unsigned>(eq.n()), U);
  const double root = std::sqrt(std::max(0.0, 1.0 - TnU * TnU));
  const double s = branch == Branch::plus ? 1.0 : -1.0;
  return clamp_unit(TnU * std::cos(eq.constants.C) +
                    s * root * std::sin(eq.constants.C));
}

double orbit_residual_branch(const OrbitEquation& eq, double r, double phi, Branch b) {
  const double R = R_of_r(r, eq.constants.E, eq.constants.A, eq.params.omega);
  return chebyshev_T(static_cast<unsigned>(eq.m()), R) - orbit_rhs(eq, phi, b);
}

double orbit_residual(const OrbitEquation& eq, double r, double phi) {
  const double a = orbit_residual_branch(eq, r, phi, Branch::plus);
  const double b = orbit_residual_branch(eq, r, phi, Branch::minus);
  return std::abs(a) <= std::abs(b) ? a : b;
}

std::vector<double> solve_r_at_phi(const OrbitEquation& eq, double phi) {
  const double kv = eq.params.k_value();
  const double z = std::pow(std::sin(kv * phi), 2);
  const double slack = 1e-9 * std::max(1.0, eq.bounds.z_max - eq.bounds.z_min);
  if (z < eq.bounds.z_min - slack || z > eq.bounds.z_max + slack)
    throw Error(Errc::no_real_root, "orbit does not visit this angle");
  const double rhs = orbit_rhs(eq, phi, eq.branch);
  const auto R_roots = chebyshev_level_set(static_cast<unsigned>(eq.m()), rhs);
  std::vector<double> radii;
  radii.reserve(R_roots.size());
  for (const double R : R_roots)
    radii.push_back(r_of_R(R, eq.constants.E, eq.constants.A, eq.params.omega));
  std::sort(radii.begin(), radii.end());
  return radii;
}

std::vector<OrbitSample> sample_orbit(const OrbitEquation& eq, int root_index,
                                      int n_samples) {
  if (root_index < 0 || root_index >= eq.m())
    throw Error(Errc::invalid_argument, "root index must lie in [0, m)");
  if (n_samples < 2) throw Error(Errc::invalid_argument, "need at least 2 samples");
  const double kv = eq.params.k_value();
  const double phi_lo = std::asin(std::sqrt(eq.bounds.z_min)) / kv;
  const double phi_hi = std::asin(std::sqrt(eq.bounds.z_max)) / kv;

  std::vector<OrbitSample> out;
  out.reserve(2 * static_cast<std::size_t>(n_samples));
  bool any = false;
  auto sweep = [&](Branch b, bool forward) {
    OrbitEquation branch_eq = eq;
    branch_eq.branch = b;
    for (int i = 0; i < n_samples; ++i) {
      const int idx = forward ? i : n_samples - 1 - i;
      const double phi =
          phi_lo + (phi_hi - phi_lo) * static_cast<double>(idx) / (n_samples - 1);
      const auto radii = solve_r_at_phi(branch_eq, phi);
      if (radii.empty()) continue;
      // root curves can merge pairwise at isolated tangency angles; index the
      // nearest existing root there
      const int j = std::min<int>(root_index, static_cast<int>(radii.size()) - 1);
      out.push_back({phi, radii[static_cast<std::size_t>(j)], root_index, b});
      any = true;
    }
  };
  sweep(Branch::plus, true);
  sweep(Branch::minus, false);
  if (!any) throw Error(Errc::empty_orbit, "no angle admits a real root");
  return out;
}

double r2_of_t(double E, double A, double omega, double delta1, double t) {
  if (omega <= 0.0) throw Error(Errc::domain_error, "r2_of_t requires omega > 0");
  const double disc = E * E - 4.0 * omega * omega * A;
  if (disc < 0.0) throw Error(Errc::complex_roots, "E^2 - 4 omega^2 A < 0");
  return (E + std::sqrt(disc) * std::sin(4.0 * omega * (t + delta1))) /
         (2.0 * omega * omega);
}

double r2_of_t_free(double E, double A, double delta1, double t) {
  if (E <= 0.0) throw Error(Errc::domain_error, "free law requires E > 0");
  const double u = t + delta1;
  return (A + 4.0 * E * E * u * u) / E;
}

double fit_delta1(const PhaseState& state, double E, double A, double omega) {
  if (omega <= 0.0) {
    // free motion: r^2 = A/E + 4E (t + delta1)^2, d(r^2)/dt = 8E (t + delta1)
    const double u = state.r * state.p_r / (2.0 * E);
    return u - state.t;
  }
  const double disc = E * E - 4.0 * omega * omega * A;
  if (disc <= 0.0)
    throw Error(Errc::complex_roots, "delta1 fit requires E^2 - 4 omega^2 A > 0");
  const double s = clamp_unit((2.0 * omega * omega * state.r * state.r - E) /
                              std::sqrt(disc));
  double angle = std::asin(s);
  if (state.r * state.p_r < 0.0) angle = kPi - angle;  // descending branch
  return angle / (4.0 * omega) - state.t;
}

OrbitEquation fit_orbit_equation(const SystemParams& params, double E, double A,
                                 const PhaseState& initial,
                                 std::span<const PhaseState> probes) {
  const double R0 = R_of_r(initial.r, E, A, params.omega);
  const double U0 = U_of_phi(initial.phi, params, A);
  const double theta_R = std::acos(clamp_unit(R0));
  const double theta_U = std::acos(clamp_unit(U0));
  const double m = static_cast<double>(params.k.num());
  const double n = static_cast<double>(params.k.den());

  const double cand[2] = {fold_phase(m * theta_R + n * theta_U),
                          fold_phase(m * theta_R - n * theta_U)};

  MotionConstants mc;
  mc.E = E;
  mc.A = A;
  mc.delta1 = fit_delta1(initial, E, A, params.omega);

  double best_score = std::numeric_limits<double>::infinity();
  OrbitEquation best;
  bool found = false;
  for (const double C : cand) {
    for (const Branch b : {Branch::plus, Branch::minus}) {
      mc.C = C;
      OrbitEquation eq = make_orbit_equation(params, mc, b);
      const double at_start = std::abs(orbit_residual_branch(eq, initial.r, initial.phi, b));
      if (at_start > 1e-6) continue;
      double score = at_start;
      for (const PhaseState& s : probes)
        score = std::max(score, std::abs(orbit_residual(eq, s.r, s.phi)));
      if (score < best_score) {
        best_score = score;
        best = eq;
        found = true;
      }
    }
  }
  if (!found)
    throw Error(Errc::inconsistent_constants,
                "no phase constant reproduces the initial point");
  return best;
}

}  // namespace ttw

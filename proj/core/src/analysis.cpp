#include "ttw/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ttw/chebyshev.hpp"
#include "ttw/dynamics.hpp"

namespace ttw {

namespace {
constexpr double kPi = 3.14159265358979323846;

double wrap_angle_diff(double a, double b) {
  double d = std::fmod(a - b, 2.0 * kPi);
  if (d > kPi) d -= 2.0 * kPi;
  if (d < -kPi) d += 2.0 * kPi;
  return std::abs(d);
}

double state_gap(const PhaseState& a, const PhaseState& b) {
  return std::max({std::abs(a.r - b.r), wrap_angle_diff(a.phi, b.phi),
                   std::abs(a.p_r - b.p_r), std::abs(a.p_phi - b.p_phi)});
}

// Times of sign changes (+ to -) of one momentum component, refined by
// bisection on the dense output.
std::vector<double> down_crossings(const Trajectory& traj, bool radial) {
  auto component = [&](const PhaseState& s) { return radial ? s.p_r : s.p_phi; };
  std::vector<double> times;
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    const double a = component(traj.samples[i - 1]);
    const double b = component(traj.samples[i]);
    if (!(a > 0.0 && b <= 0.0)) continue;
    double lo = traj.samples[i - 1].t, hi = traj.samples[i].t;
    for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (component(traj.state_at(mid)) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    times.push_back(0.5 * (lo + hi));
  }
  return times;
}

double mean_spacing(const std::vector<double>& t) {
  if (t.size() < 2) return 0.0;
  return (t.back() - t.front()) / static_cast<double>(t.size() - 1);
}

}  // namespace

const char* degenerate_name(DegenerateClass c) noexcept {
  switch (c) {
    case DegenerateClass::GenericClosed: return "GenericClosed";
    case DegenerateClass::Segment: return "Segment";
    case DegenerateClass::Circle: return "Circle";
    case DegenerateClass::HarmonicLimit: return "HarmonicLimit";
    case DegenerateClass::Unbounded: return "Unbounded";
  }
  return "?";
}

std::vector<SingularPoint> singular_points(const OrbitEquation& eq) {
  std::vector<SingularPoint> out;
  const auto criticals = chebyshev_critical_points(static_cast<unsigned>(eq.m()));
  if (criticals.empty()) return out;

  const double kv = eq.params.k_value();
  const double A = eq.constants.A;
  const double dz = angular_discriminant(A, eq.params.alpha, eq.params.beta, kv);
  const double cosC = std::cos(eq.constants.C);

  // angles where the branch bracket vanishes: T_n(U) = +-cos C
  std::vector<double> angles;
  for (const double target : {cosC, -cosC}) {
    for (const double U : chebyshev_level_set(static_cast<unsigned>(eq.n()), target)) {
      const double z = ((A - (eq.params.alpha - eq.params.beta) * kv * kv) -
                        U * std::sqrt(dz)) /
                       (2.0 * A);
      if (z < 0.0 || z > 1.0) continue;
      const double phi = std::asin(std::sqrt(z)) / kv;
      const bool dup = std::any_of(angles.begin(), angles.end(), [&](double a) {
        return std::abs(a - phi) < 1e-10;
      });
      if (!dup) angles.push_back(phi);
    }
  }
  std::sort(angles.begin(), angles.end());

  for (const double Rstar : criticals) {
    const double r = r_of_R(Rstar, eq.constants.E, A, eq.params.omega);
    for (const double phi : angles) {
      SingularPoint pt;
      pt.r = r;
      pt.phi = phi;
      pt.Rstar = Rstar;
      pt.on_trajectory = std::abs(orbit_residual(eq, r, phi)) < 1e-8;
      out.push_back(pt);
    }
  }
  return out;
}

ClosureReport measure_closure(const Trajectory& traj) {
  const SystemParams& params = traj.params;
  if (params.omega <= 0.0)
    throw Error(Errc::insufficient_span, "closure measurement requires omega > 0");
  if (!traj.has_dense())
    throw Error(Errc::insufficient_span, "closure measurement requires dense output");
  const double T = params.radial_period();
  const double span = traj.t_end() - traj.t_begin();
  if (span < 2.0 * T)
    throw Error(Errc::insufficient_span, "trajectory must span at least two periods");

  ClosureReport rep;

  const auto radial_maxima = down_crossings(traj, true);
  const auto angular_maxima = down_crossings(traj, false);
  rep.radial_period = mean_spacing(radial_maxima);
  const double T_angular = mean_spacing(angular_maxima);
  rep.k_period_angle = (rep.radial_period > 0.0 && T_angular > 0.0)
                           ? kPi * T_angular / rep.radial_period
                           : std::numeric_limits<double>::quiet_NaN();

  // closure gap at the nominal period pi / (2 omega)
  const double t0 = traj.t_begin();
  const int n_probe = 16;
  auto gap_at = [&](double tau) {
    double g = 0.0;
    for (int i = 0; i < n_probe; ++i) {
      const double t = t0 + (span - tau) * static_cast<double>(i) / (n_probe - 1);
      g = std::max(g, state_gap(traj.state_at(t + tau), traj.state_at(t)));
    }
    return g;
  };
  rep.closure_gap = span >= T ? gap_at(T) : std::numeric_limits<double>::quiet_NaN();

  // full-state recurrence: the first multiple of the base oscillation whose
  // gap collapses to integrator accuracy
  const double base = rep.radial_period > 0.0 ? rep.radial_period : T_angular;
  rep.period_estimate = std::numeric_limits<double>::quiet_NaN();
  if (base > 0.0) {
    const double recur_tol = 1e-6;
    for (int j = 1; j * base <= 0.75 * span; ++j) {
      if (gap_at(j * base) < recur_tol) {
        rep.period_estimate = j * base;
        break;
      }
    }
  }

  // fit the algebraic orbit from the run and count its singular points
  const double E = traj.conserved.front().H;
  const double A = traj.conserved.front().X;
  try {
    std::vector<PhaseState> probes;
    const std::size_t stride = std::max<std::size_t>(1, traj.samples.size() / 16);
    for (std::size_t i = stride; i < traj.samples.size(); i += stride)
      probes.push_back(traj.samples[i]);
    const OrbitEquation eq =
        fit_orbit_equation(params, E, A, traj.samples.front(), probes);
    const auto pts = singular_points(eq);
    rep.n_singular = static_cast<int>(
        std::count_if(pts.begin(), pts.end(), [](const SingularPoint& p) {
          return p.on_trajectory;
        }));
  } catch (const Error&) {
    rep.n_singular = -1;  // not an orbit the algebraic machinery covers
  }
  return rep;
}

DegenerateClass classify_degenerate(const SystemParams& params,
                                    const MotionConstants& constants) {
  const BoundsReport rep = check_boundedness(params, constants.E, constants.A);
  switch (rep.verdict) {
    case Verdict::Unbounded: return DegenerateClass::Unbounded;
    case Verdict::Circle: return DegenerateClass::Circle;
    case Verdict::HarmonicLimit: return DegenerateClass::HarmonicLimit;
    case Verdict::Segment: return DegenerateClass::Segment;
    case Verdict::Bounded:
      if (std::abs(std::sin(constants.C)) < 1e-12) return DegenerateClass::Segment;
      return DegenerateClass::GenericClosed;
  }
  return DegenerateClass::Unbounded;
}

}  // namespace ttw

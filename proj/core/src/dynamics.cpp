#include "ttw/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "ttw/bounds.hpp"

namespace ttw {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Angular barrier k^2 (alpha / cos^2(k phi) + beta / sin^2(k phi)) and its
// phi-derivative. Throws SectorWall on a vanishing denominator that matters.
struct Barrier {
  double value;
  double d_phi;
};

Barrier barrier_terms(double phi, const SystemParams& p) {
  const double kv = p.k_value();
  const double c = std::cos(kv * phi);
  const double s = std::sin(kv * phi);
  if (p.alpha != 0.0 && c == 0.0)
    throw Error(Errc::sector_wall, "cos(k phi) vanished with alpha > 0");
  if (p.beta != 0.0 && s == 0.0)
    throw Error(Errc::sector_wall, "sin(k phi) vanished with beta > 0");
  const double k2 = kv * kv;
  double v = 0.0, dv = 0.0;
  if (p.alpha != 0.0) {
    v += p.alpha * k2 / (c * c);
    dv += 2.0 * p.alpha * k2 * kv * s / (c * c * c);
  }
  if (p.beta != 0.0) {
    v += p.beta * k2 / (s * s);
    dv -= 2.0 * p.beta * k2 * kv * c / (s * s * s);
  }
  return {v, dv};
}

using Vec4 = std::array<double, 4>;  // (r, phi, p_r, p_phi)

Vec4 rhs(const Vec4& y, const SystemParams& p) {
  const double r = y[0];
  const auto bar = barrier_terms(y[1], p);
  const double r2 = r * r;
  const double r3 = r2 * r;
  return Vec4{
      2.0 * y[2],
      2.0 * y[3] / r2,
      2.0 * y[3] * y[3] / r3 - 2.0 * p.omega * p.omega * r + 2.0 * bar.value / r3,
      -bar.d_phi / r2,
  };
}

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights (Hairer, Noersett, Wanner).
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

PhaseState to_state(double t, const Vec4& y) {
  return PhaseState{t, y[0], y[1], y[2], y[3]};
}

struct LeapfrogState {
  double x, y, px, py;
};

LeapfrogState to_cartesian(const Vec4& s) {
  const double c = std::cos(s[1]), sn = std::sin(s[1]);
  return {s[0] * c, s[0] * sn, s[2] * c - s[3] * sn / s[0], s[2] * sn + s[3] * c / s[0]};
}

Vec4 to_polar(const LeapfrogState& c) {
  const double r = std::hypot(c.x, c.y);
  return {r, std::atan2(c.y, c.x), (c.x * c.px + c.y * c.py) / r, c.x * c.py - c.y * c.px};
}

}  // namespace

double hamiltonian(const PhaseState& state, const SystemParams& params) {
  if (state.r <= 0.0) throw Error(Errc::domain_error, "hamiltonian requires r > 0");
  const auto bar = barrier_terms(state.phi, params);
  const double r2 = state.r * state.r;
  return state.p_r * state.p_r + state.p_phi * state.p_phi / r2 +
         params.omega * params.omega * r2 + bar.value / r2;
}

double xk_value(const PhaseState& state, const SystemParams& params) {
  const auto bar = barrier_terms(state.phi, params);
  return state.p_phi * state.p_phi + bar.value;
}

Derivatives eom(const PhaseState& state, const SystemParams& params) {
  if (state.r <= 0.0) throw Error(Errc::domain_error, "eom requires r > 0");
  const Vec4 d = rhs({state.r, state.phi, state.p_r, state.p_phi}, params);
  return {d[0], d[1], d[2], d[3]};
}

PhaseState Trajectory::state_at(double t) const {
  if (dense.empty())
    throw Error(Errc::domain_error, "trajectory carries no dense output");
  if (t < dense.front().t0 - 1e-12 || t > dense.back().t0 + dense.back().h + 1e-12)
    throw Error(Errc::domain_error, "time outside the integrated span");
  // binary search for the segment containing t
  std::size_t lo = 0, hi = dense.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (dense[mid].t0 <= t)
      lo = mid;
    else
      hi = mid - 1;
  }
  const DenseSegment& seg = dense[lo];
  const double theta = std::clamp((t - seg.t0) / seg.h, 0.0, 1.0);
  const double theta1 = 1.0 - theta;
  Vec4 y;
  for (int i = 0; i < 4; ++i) {
    y[i] = seg.rcont[0][i] +
           theta * (seg.rcont[1][i] +
                    theta1 * (seg.rcont[2][i] +
                              theta * (seg.rcont[3][i] + theta1 * seg.rcont[4][i])));
  }
  return to_state(t, y);
}

namespace {

Trajectory integrate_adaptive(const PhaseState& initial, const SystemParams& params,
                              double t_end, const IntegratorConfig& config) {
  Trajectory traj;
  traj.params = params;

  Vec4 y{initial.r, initial.phi, initial.p_r, initial.p_phi};
  double t = initial.t;
  const double span = t_end - t;
  const double h_min = 1e-14 * std::max(span, params.omega > 0.0
                                                  ? params.radial_period()
                                                  : span);
  double h_max = config.max_step > 0.0 ? config.max_step : span;
  h_max = std::min(h_max, span);

  const bool guard_sector = params.alpha > 0.0 && params.beta > 0.0;
  const int sector0 = guard_sector ? sector_of(initial.phi, params.k) : 0;

  const double H0 = hamiltonian(initial, params);
  const double X0 = xk_value(initial, params);
  auto record = [&](double tt, const Vec4& yy) {
    const PhaseState s = to_state(tt, yy);
    const double H = hamiltonian(s, params);
    const double X = xk_value(s, params);
    traj.samples.push_back(s);
    traj.conserved.push_back({H, X});
    if (H0 != 0.0)
      traj.max_H_drift = std::max(traj.max_H_drift, std::abs(H - H0) / std::abs(H0));
    if (X0 != 0.0)
      traj.max_X_drift = std::max(traj.max_X_drift, std::abs(X - X0) / std::abs(X0));
  };
  record(t, y);

  Vec4 k1 = rhs(y, params);
  double h_ctrl = std::min(h_max, 1e-4 * std::max(span, 1.0));

  while (t < t_end) {
    if (t_end - t < h_min) break;  // within rounding of the endpoint
    const double h = std::min(h_ctrl, t_end - t);
    if (h < h_min)
      throw Error(Errc::step_failure, "step size underflow near a barrier");

    Vec4 k2, k3, k4, k5, k6, k7, y1;
    Vec4 ytmp;
    for (int i = 0; i < 4; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    k2 = rhs(ytmp, params);
    for (int i = 0; i < 4; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = rhs(ytmp, params);
    for (int i = 0; i < 4; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = rhs(ytmp, params);
    for (int i = 0; i < 4; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = rhs(ytmp, params);
    for (int i = 0; i < 4; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                            a65 * k5[i]);
    k6 = rhs(ytmp, params);
    for (int i = 0; i < 4; ++i)
      y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = rhs(y1, params);

    double err = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double sc =
          config.abs_tol + config.rel_tol * std::max(std::abs(y[i]), std::abs(y1[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(err / 4.0);

    if (err <= 1.0) {
      if (config.dense_output) {
        DenseSegment seg;
        seg.t0 = t;
        seg.h = h;
        for (int i = 0; i < 4; ++i) {
          const double ydiff = y1[i] - y[i];
          const double bspl = h * k1[i] - ydiff;
          seg.rcont[0][i] = y[i];
          seg.rcont[1][i] = ydiff;
          seg.rcont[2][i] = bspl;
          seg.rcont[3][i] = ydiff - h * k7[i] - bspl;
          seg.rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                 d6 * k6[i] + d7 * k7[i]);
        }
        traj.dense.push_back(seg);
      }
      t += h;
      if (t_end - t < h_min) t = t_end;  // snap away the last-ulp remainder
      y = y1;
      k1 = k7;  // FSAL
      record(t, y);
      if (guard_sector && sector_of(y[1], params.k) != sector0)
        throw Error(Errc::sector_wall, "trajectory crossed a sector wall");
    }
    const double safety = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h_ctrl = h * std::clamp(safety, 0.2, 5.0);
    h_ctrl = std::min(h_ctrl, h_max);
  }
  return traj;
}

Trajectory integrate_symplectic(const PhaseState& initial, const SystemParams& params,
                                double t_end, const IntegratorConfig& config) {
  Trajectory traj;
  traj.params = params;

  auto grad_V = [&](double x, double yy) {
    const double r = std::hypot(x, yy);
    const double phi = std::atan2(yy, x);
    const auto bar = barrier_terms(phi, params);
    const double r2 = r * r;
    const double V_r = 2.0 * params.omega * params.omega * r - 2.0 * bar.value / (r2 * r);
    const double V_phi = bar.d_phi / r2;
    return std::pair{V_r * x / r - V_phi * yy / r2, V_r * yy / r + V_phi * x / r2};
  };

  const bool guard_sector = params.alpha > 0.0 && params.beta > 0.0;
  const int sector0 = guard_sector ? sector_of(initial.phi, params.k) : 0;
  const double H0 = hamiltonian(initial, params);
  const double X0 = xk_value(initial, params);

  auto record = [&](double tt, const Vec4& yy) {
    const PhaseState s = to_state(tt, yy);
    traj.samples.push_back(s);
    const double H = hamiltonian(s, params);
    const double X = xk_value(s, params);
    traj.conserved.push_back({H, X});
    if (H0 != 0.0)
      traj.max_H_drift = std::max(traj.max_H_drift, std::abs(H - H0) / std::abs(H0));
    if (X0 != 0.0)
      traj.max_X_drift = std::max(traj.max_X_drift, std::abs(X - X0) / std::abs(X0));
  };

  Vec4 y{initial.r, initial.phi, initial.p_r, initial.p_phi};
  LeapfrogState c = to_cartesian(y);
  double t = initial.t;
  record(t, y);
  const double h = config.fixed_step;
  const long long n_steps = static_cast<long long>(std::ceil((t_end - t) / h));
  for (long long step = 0; step < n_steps; ++step) {
    const double hh = std::min(h, t_end - t);
    auto [gx, gy] = grad_V(c.x, c.y);
    c.px -= 0.5 * hh * gx;
    c.py -= 0.5 * hh * gy;
    c.x += hh * 2.0 * c.px;  // q_dot = 2 p with the H = p^2 normalization
    c.y += hh * 2.0 * c.py;
    std::tie(gx, gy) = grad_V(c.x, c.y);
    c.px -= 0.5 * hh * gx;
    c.py -= 0.5 * hh * gy;
    t += hh;
    const double phi_prev = y[1];
    y = to_polar(c);
    // atan2 wraps at +-pi; unwrap so sectors wider than pi stay contiguous
    y[1] += 2.0 * kPi * std::round((phi_prev - y[1]) / (2.0 * kPi));
    record(t, y);
    if (guard_sector && sector_of(y[1], params.k) != sector0)
      throw Error(Errc::sector_wall, "trajectory crossed a sector wall");
  }
  return traj;
}

}  // namespace

Trajectory integrate(const PhaseState& initial, const SystemParams& params,
                     double t_end, const IntegratorConfig& config) {
  params.validate();
  config.validate();
  if (!(t_end > initial.t))
    throw Error(Errc::invalid_argument, "t_end must exceed the initial time");
  if (initial.r <= 0.0) throw Error(Errc::invalid_argument, "initial r must be > 0");

  if (config.method == IntegratorMethod::fixed_step_symplectic)
    return integrate_symplectic(initial, params, t_end, config);
  return integrate_adaptive(initial, params, t_end, config);
}

PhaseState state_from_constants(const SystemParams& params, double E, double A,
                                double phi0, int sign_p_r, int sign_p_phi,
                                std::optional<double> r0_sq) {
  params.validate();
  double r2;
  if (r0_sq.has_value()) {
    r2 = *r0_sq;
    if (r2 <= 0.0) throw Error(Errc::invalid_argument, "r0^2 must be positive");
  } else if (params.omega > 0.0) {
    const auto [lo, hi] = radial_bounds(E, A, params.omega);
    r2 = 0.5 * (lo + hi);
  } else {
    if (E <= 0.0) throw Error(Errc::inconsistent_constants, "omega = 0 requires E > 0");
    r2 = 2.0 * A / E;  // generic interior radius of the free motion
    if (r2 <= 0.0) r2 = 1.0;
  }

  PhaseState s;
  s.t = 0.0;
  s.r = std::sqrt(r2);
  s.phi = phi0;

  const auto bar = barrier_terms(phi0, params);
  const double w2 = A - bar.value;
  if (w2 < -1e-10 * std::max(1.0, std::abs(A)))
    throw Error(Errc::inconsistent_constants, "A below the angular barrier at phi0");
  s.p_phi = (sign_p_phi >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(w2, 0.0));

  const double v2 = E - A / r2 - params.omega * params.omega * r2;
  if (v2 < -1e-10 * std::max(1.0, std::abs(E)))
    throw Error(Errc::inconsistent_constants, "E below the effective potential at r0");
  s.p_r = (sign_p_r >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(v2, 0.0));
  return s;
}

}  // namespace ttw

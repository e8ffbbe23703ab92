#include "ttw/k1.hpp"

#include <cmath>
#include <limits>

namespace ttw {

namespace {
constexpr double kPi = 3.14159265358979323846;

double fold_pi(double s) {
  s = std::fmod(s, 2.0 * kPi);
  if (s < 0.0) s += 2.0 * kPi;
  if (s > kPi) s = 2.0 * kPi - s;
  return s;
}

void require_k1(const SystemParams& params) {
  if (!(params.k == Rational(1, 1)))
    throw Error(Errc::invalid_argument, "cartesian separation requires k = 1");
  if (params.omega <= 0.0)
    throw Error(Errc::invalid_argument, "cartesian solution requires omega > 0");
}
}  // namespace

double CartesianConstants::S() const noexcept { return fold_pi(C1 - C2); }

const char* region_name(Region r) noexcept {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::V: return "V";
    case Region::VI: return "VI";
    case Region::OnCurve: return "OnCurve";
    case Region::OnDashed: return "OnDashed";
  }
  return "?";
}

void validate_cartesian(const CartesianConstants& cc, const SystemParams& params) {
  require_k1(params);
  const double om = params.omega;
  const double lo = 2.0 * om * std::sqrt(params.alpha);
  const double hi = cc.E() - 2.0 * om * std::sqrt(params.beta);
  if (cc.E1 < lo - 1e-12 || cc.E1 > hi + 1e-12)
    throw Error(Errc::inconsistent_constants,
                "E1 outside [2 omega sqrt(alpha), E - 2 omega sqrt(beta)]");
  if (cc.E1 * cc.E1 - 4.0 * params.alpha * om * om < -1e-12 ||
      cc.E2 * cc.E2 - 4.0 * params.beta * om * om < -1e-12)
    throw Error(Errc::inconsistent_constants, "oscillation radicand negative");
}

std::pair<double, double> cartesian_xy_of_t(const CartesianConstants& cc,
                                            const SystemParams& params, double t) {
  validate_cartesian(cc, params);
  const double om = params.omega;
  const double Q1 = std::sqrt(std::max(0.0, cc.E1 * cc.E1 - 4.0 * params.alpha * om * om));
  const double Q2 = std::sqrt(std::max(0.0, cc.E2 * cc.E2 - 4.0 * params.beta * om * om));
  const double x2 = (cc.E1 + Q1 * std::sin(4.0 * om * t + cc.C1)) / (2.0 * om * om);
  const double y2 = (cc.E2 + Q2 * std::sin(4.0 * om * t + cc.C2)) / (2.0 * om * om);
  return {x2, y2};
}

CartesianState cartesian_state_of_t(const CartesianConstants& cc,
                                    const SystemParams& params, double t) {
  const auto [x2, y2] = cartesian_xy_of_t(cc, params, t);
  const double om = params.omega;
  const double Q1 = std::sqrt(std::max(0.0, cc.E1 * cc.E1 - 4.0 * params.alpha * om * om));
  const double Q2 = std::sqrt(std::max(0.0, cc.E2 * cc.E2 - 4.0 * params.beta * om * om));
  CartesianState s;
  s.x = std::sqrt(x2);
  s.y = std::sqrt(y2);
  // d(x^2)/dt = 4 x p_x with the H = p^2 normalization
  s.p_x = Q1 * std::cos(4.0 * om * t + cc.C1) / (2.0 * om * s.x);
  s.p_y = Q2 * std::cos(4.0 * om * t + cc.C2) / (2.0 * om * s.y);
  return s;
}

PhaseState polar_state_of_t(const CartesianConstants& cc, const SystemParams& params,
                            double t) {
  const CartesianState c = cartesian_state_of_t(cc, params, t);
  PhaseState s;
  s.t = t;
  s.r = std::hypot(c.x, c.y);
  s.phi = std::atan2(c.y, c.x);
  s.p_r = (c.x * c.p_x + c.y * c.p_y) / s.r;
  s.p_phi = c.x * c.p_y - c.y * c.p_x;
  return s;
}

std::pair<double, double> cartesian_orbit_y2_of_x(const CartesianConstants& cc,
                                                  const SystemParams& params,
                                                  double x) {
  validate_cartesian(cc, params);
  const double om = params.omega;
  const double x2 = x * x;
  const double Q1sq = cc.E1 * cc.E1 - 4.0 * params.alpha * om * om;
  const double Q2sq = cc.E2 * cc.E2 - 4.0 * params.beta * om * om;
  const double inner = -params.alpha + cc.E1 * x2 - om * om * x2 * x2;
  if (inner < -1e-12 * std::max(1.0, std::abs(cc.E1)))
    throw Error(Errc::out_of_rectangle, "x outside the admissible band");
  const double S = cc.S();
  const double common = cc.E2 / (2.0 * om * om);
  const double scale = std::sqrt(std::max(0.0, Q2sq)) /
                       (2.0 * om * om * std::sqrt(std::max(Q1sq, 1e-300)));
  const double cos_part = std::cos(S) * (-cc.E1 + 2.0 * om * om * x2);
  const double sin_part = 2.0 * om * std::sin(S) * std::sqrt(std::max(0.0, inner));
  return {common + scale * (cos_part + sin_part), common + scale * (cos_part - sin_part)};
}

K1MapResult constants_cartesian_to_polar(const CartesianConstants& cc,
                                         const SystemParams& params) {
  validate_cartesian(cc, params);
  const double om = params.omega;
  const double al = params.alpha, be = params.beta;
  const double E = cc.E();
  const double S = cc.S();
  const double Q1 = std::sqrt(std::max(0.0, cc.E1 * cc.E1 - 4.0 * al * om * om));
  const double Q2 = std::sqrt(std::max(0.0, cc.E2 * cc.E2 - 4.0 * be * om * om));

  K1MapResult out;
  out.A = (cc.E1 * cc.E2 + 2.0 * (al + be) * om * om - Q1 * Q2 * std::cos(S)) /
          (2.0 * om * om);

  const double root_floor = std::pow(std::sqrt(al) + std::sqrt(be), 2);
  if (out.A < root_floor - 1e-12)
    throw Error(Errc::denominator_complex,
                "A below (sqrt(alpha) + sqrt(beta))^2, phase denominator imaginary");

  const double num = out.A * (2.0 * cc.E1 - E) - E * (al - be);
  const double den2 = (out.A * out.A + (al - be) * (al - be) -
                       2.0 * out.A * (al + be)) *
                      (E * E - 4.0 * om * om * out.A);
  out.cos_C = den2 > 0.0 ? num / std::sqrt(den2)
                         : std::numeric_limits<double>::infinity();
  out.region = classify_region(cc.E1, out.A, params, E).region;
  return out;
}

double region_boundary_value(double E1, double A, const SystemParams& params,
                             double E) {
  const double om = params.omega, al = params.alpha, be = params.beta;
  return om * om * A * A + A * (E1 * E1 - E1 * E - 2.0 * (al + be) * om * om) +
         E * E * al + E1 * E * (-al + be) + (al - be) * (al - be) * om * om;
}

RegionResult classify_region(double E1, double A, const SystemParams& params,
                             double E) {
  require_k1(params);
  const double om = params.omega, al = params.alpha, be = params.beta;
  const double Q = region_boundary_value(E1, A, params, E);
  const double num = A * (2.0 * E1 - E) - E * (al - be);
  const double den2 =
      (A * A + (al - be) * (al - be) - 2.0 * A * (al + be)) * (E * E - 4.0 * om * om * A);

  // scale-aware tolerances for the measure-zero loci
  const double scaleQ = std::max({std::abs(om * om * A * A), std::abs(E * E * al), 1.0});
  const double scaleN = std::max({std::abs(A * E), 1.0});
  RegionResult res;
  if (std::abs(Q) < 1e-9 * scaleQ) {
    res.region = Region::OnCurve;
    res.zero_over_zero = std::abs(num) < 1e-9 * scaleN;
    return res;
  }
  if (den2 > 0.0) {
    const double c = num / std::sqrt(den2);
    if (std::abs(num) < 1e-9 * scaleN && std::abs(c) < 1.0) {
      res.region = Region::OnDashed;
    } else if (std::abs(c) < 1.0) {
      res.region = c > 0.0 ? Region::I : Region::II;
    } else if (c < -1.0) {
      res.region = (2.0 * E1 - E) < 0.0 ? Region::III : Region::IV;
    } else {
      res.region = (2.0 * E1 - E) < 0.0 ? Region::V : Region::VI;
    }
    return res;
  }
  // outside the admissible strip the phase is not real; continue the split by
  // the sign pattern of the numerator and the E1 = E/2 axis
  if (num < 0.0)
    res.region = (2.0 * E1 - E) < 0.0 ? Region::III : Region::IV;
  else
    res.region = (2.0 * E1 - E) < 0.0 ? Region::V : Region::VI;
  return res;
}

}  // namespace ttw

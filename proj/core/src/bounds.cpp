#include "ttw/bounds.hpp"

#include <cmath>
#include <limits>

namespace ttw {

namespace {
constexpr double kWallTol = 1e-12;
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Bounded: return "Bounded";
    case Verdict::Unbounded: return "Unbounded";
    case Verdict::Circle: return "Circle";
    case Verdict::Segment: return "Segment";
    case Verdict::HarmonicLimit: return "HarmonicLimit";
  }
  return "?";
}

int sector_of(double phi, const Rational& k) {
  const double kv = k.value();
  if (std::abs(std::sin(2.0 * kv * phi)) < kWallTol)
    throw Error(Errc::boundary_angle, "phi lies on a sector wall");
  const double width = 3.14159265358979323846 / (2.0 * kv);
  return static_cast<int>(std::floor(phi / width));
}

std::pair<double, double> radial_bounds(double E, double A, double omega) {
  if (omega <= 0.0) throw Error(Errc::domain_error, "radial bounds require omega > 0");
  const double disc = E * E - 4.0 * omega * omega * A;
  if (disc < 0.0)
    throw Error(Errc::complex_roots, "E^2 - 4 omega^2 A < 0, no real turning points");
  const double sq = std::sqrt(disc);
  const double r2_hi = (E + sq) / (2.0 * omega * omega);
  // Evaluate the small root through the product r1^2 r2^2 = A / omega^2 when
  // possible; avoids cancellation and gives an exact 0 in the A = 0 limit.
  double r2_lo;
  if (r2_hi > 0.0)
    r2_lo = A / (omega * omega * r2_hi);
  else
    r2_lo = (E - sq) / (2.0 * omega * omega);
  return {r2_lo, r2_hi};
}

double angular_discriminant(double A, double alpha, double beta, double k) {
  const double s = A - alpha * k * k + beta * k * k;
  return s * s - 4.0 * A * beta * k * k;
}

std::pair<double, double> angular_bounds(double A, double alpha, double beta,
                                         const Rational& k) {
  if (A <= 0.0) throw Error(Errc::domain_error, "angular bounds require A > 0");
  const double kv = k.value();
  const double disc = angular_discriminant(A, alpha, beta, kv);
  if (disc < 0.0)
    throw Error(Errc::complex_roots, "angular quadratic has complex roots");
  const double sum = (A - alpha * kv * kv + beta * kv * kv) / A;  // z1 + z2
  const double prod = beta * kv * kv / A;                         // z1 z2
  const double sq = std::sqrt(disc) / A;
  const double z_hi = 0.5 * (sum + sq);
  const double z_lo = (z_hi > 0.0) ? prod / z_hi : 0.5 * (sum - sq);
  const double slack = 1e-12;
  if (z_lo < -slack || z_hi > 1.0 + slack)
    throw Error(Errc::out_of_unit_interval, "angular root outside [0, 1]");
  return {std::max(z_lo, 0.0), std::min(z_hi, 1.0)};
}

BoundsReport check_boundedness(const SystemParams& params, double E, double A) {
  params.validate();
  BoundsReport rep;
  const double om = params.omega;
  const double kv = params.k_value();

  if (om == 0.0) {
    rep.verdict = Verdict::Unbounded;  // no confining term, r^2 grows without bound
    return rep;
  }
  if (A == 0.0) {
    rep.verdict = Verdict::HarmonicLimit;
    if (E > 0.0) {
      rep.r2_min = 0.0;
      rep.r2_max = E / (om * om);
    }
    return rep;
  }
  if (A < 0.0) {
    rep.verdict = Verdict::Unbounded;  // X_k >= 0 on real states; no motion here
    return rep;
  }

  const double disc_r = E * E - 4.0 * om * om * A;
  if (disc_r < 0.0) {
    rep.verdict = Verdict::Unbounded;
    return rep;
  }
  auto [r2_lo, r2_hi] = radial_bounds(E, A, om);
  rep.r2_min = r2_lo;
  rep.r2_max = r2_hi;
  if (r2_lo <= 0.0 || E <= 0.0) {
    rep.verdict = Verdict::Unbounded;  // turning radii not both positive
    return rep;
  }
  if (disc_r == 0.0) {
    rep.verdict = Verdict::Circle;
    rep.r2_min = rep.r2_max = E / (2.0 * om * om);
    // the angular interval still exists on a circle orbit
    const double dz = angular_discriminant(A, params.alpha, params.beta, kv);
    if (dz >= 0.0) {
      try {
        auto [z1, z2] = angular_bounds(A, params.alpha, params.beta, params.k);
        rep.z_min = z1;
        rep.z_max = z2;
      } catch (const Error&) {
      }
    }
    return rep;
  }

  const double disc_z = angular_discriminant(A, params.alpha, params.beta, kv);
  if (disc_z < 0.0) {
    rep.verdict = Verdict::Unbounded;  // no angle admits real angular momentum
    return rep;
  }
  if (disc_z == 0.0) {
    // z interval collapses to a point: the orbit is a radial line segment
    rep.verdict = Verdict::Segment;
    const double z = (A - params.alpha * kv * kv + params.beta * kv * kv) / (2.0 * A);
    rep.z_min = rep.z_max = z;
    return rep;
  }
  if (A <= kv * kv * std::abs(params.beta - params.alpha)) {
    rep.verdict = Verdict::Unbounded;  // kills the spurious low-A root branch
    return rep;
  }

  std::pair<double, double> z;
  try {
    z = angular_bounds(A, params.alpha, params.beta, params.k);
  } catch (const Error&) {
    rep.verdict = Verdict::Unbounded;
    return rep;
  }
  rep.z_min = z.first;
  rep.z_max = z.second;
  if (!(rep.z_min < rep.z_max)) {
    rep.verdict = Verdict::Segment;
    return rep;
  }
  rep.verdict = Verdict::Bounded;
  return rep;
}

}  // namespace ttw

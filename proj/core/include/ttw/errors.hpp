#pragma once

#include <stdexcept>
#include <string>

namespace ttw {

// Failure categories used across the library. Classification outcomes
// (bounded / circle / segment / ...) are verdicts, not errors; these codes
// cover genuine contract violations and numerical failures only.
enum class Errc {
  boundary_angle,          // angle within tolerance of a sector wall
  complex_roots,           // turning-point quadratic has no real roots
  out_of_unit_interval,    // angular root left [0,1]
  sector_wall,             // trigonometric denominator vanished with a nonzero barrier
  step_failure,            // adaptive step controller underflowed the minimum step
  inconsistent_constants,  // momentum radicand negative for the requested state
  domain_error,            // argument outside the documented domain
  out_of_annulus,          // radius outside the radial turning interval
  out_of_angular_range,    // sin^2(k phi) outside the angular turning interval
  no_real_root,            // orbit equation has no real root at this angle
  empty_orbit,             // no angle in the sector admits a real root
  insufficient_span,       // trajectory too short for the requested measurement
  out_of_rectangle,        // cartesian coordinate outside the bounding rectangle
  denominator_complex,     // phase-constant denominator not real
  unknown_preset,          // figure preset id not recognized
  invalid_argument,        // malformed parameter (e.g. non-positive rational)
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::boundary_angle: return "BoundaryAngle";
    case Errc::complex_roots: return "ComplexRoots";
    case Errc::out_of_unit_interval: return "OutOfUnitInterval";
    case Errc::sector_wall: return "SectorWall";
    case Errc::step_failure: return "StepFailure";
    case Errc::inconsistent_constants: return "InconsistentConstants";
    case Errc::domain_error: return "DomainError";
    case Errc::out_of_annulus: return "OutOfAnnulus";
    case Errc::out_of_angular_range: return "OutOfAngularRange";
    case Errc::no_real_root: return "NoRealRoot";
    case Errc::empty_orbit: return "EmptyOrbit";
    case Errc::insufficient_span: return "InsufficientSpan";
    case Errc::out_of_rectangle: return "OutOfRectangle";
    case Errc::denominator_complex: return "DenominatorComplex";
    case Errc::unknown_preset: return "UnknownPreset";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace ttw

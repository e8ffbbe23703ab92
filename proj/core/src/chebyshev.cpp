#include "ttw/chebyshev.hpp"

#include <algorithm>
#include <cmath>

#include "ttw/errors.hpp"

namespace ttw {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEdgeTol = 1e-12;

double clamp_unit(double x, const char* what) {
  if (x > 1.0 + kEdgeTol || x < -1.0 - kEdgeTol)
    throw Error(Errc::domain_error, what);
  return std::min(1.0, std::max(-1.0, x));
}
}  // namespace

double chebyshev_T(unsigned degree, double x) {
  x = clamp_unit(x, "chebyshev argument outside [-1, 1]");
  if (degree == 0) return 1.0;
  double t_prev = 1.0;
  double t = x;
  for (unsigned j = 2; j <= degree; ++j) {
    const double t_next = 2.0 * x * t - t_prev;
    t_prev = t;
    t = t_next;
  }
  return t;
}

std::vector<double> chebyshev_level_set(unsigned degree, double c) {
  c = clamp_unit(c, "chebyshev level outside [-1, 1]");
  if (degree == 0) return {};  // constant polynomial, no isolated roots
  const double theta0 = std::acos(c);
  std::vector<double> roots;
  roots.reserve(degree);
  for (unsigned j = 0; j < degree; ++j) {
    roots.push_back(std::cos((theta0 + 2.0 * kPi * j) / degree));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-10; }),
              roots.end());
  return roots;
}

std::vector<double> chebyshev_critical_points(unsigned degree) {
  std::vector<double> pts;
  if (degree < 2) return pts;
  pts.reserve(degree - 1);
  for (unsigned j = degree - 1; j >= 1; --j)  // ascending in cos
    pts.push_back(std::cos(j * kPi / degree));
  return pts;
}

}  // namespace ttw

#pragma once

#include <vector>

namespace ttw {

// Chebyshev polynomial of the first kind, T_deg(x) = cos(deg * arccos x) on
// [-1, 1], evaluated by the three-term recurrence. Arguments up to 1e-12
// outside [-1, 1] are clamped; anything further throws DomainError.
double chebyshev_T(unsigned degree, double x);

// All real solutions x in [-1, 1] of T_degree(x) = c for |c| <= 1 (values up
// to 1e-12 outside are clamped). Returned sorted ascending, deduplicated at
// 1e-10; generically there are exactly `degree` of them.
std::vector<double> chebyshev_level_set(unsigned degree, double c);

// Interior critical points of T_degree: cos(j pi / degree), j = 1 .. degree-1,
// sorted ascending. Empty for degree <= 1.
std::vector<double> chebyshev_critical_points(unsigned degree);

}  // namespace ttw

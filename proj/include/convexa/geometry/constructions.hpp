#pragma once

#include <utility>
#include <vector>

#include "convexa/geometry/realization.hpp"

namespace convexa {

// Convex polygon from its vertices in either orientation (closed rows).
HalfspaceBody polygon_body(const std::vector<RationalVector>& vertices);
// Closed segment [p, q] in the plane; p == q gives a point.
HalfspaceBody segment_body(const RationalVector& p, const RationalVector& q);

// Intervals [lo, hi] (closed) or (lo, hi) (open) on the line.
Realization interval_realization(const std::vector<std::pair<Rational, Rational>>& intervals,
                                 RealizationMode mode = RealizationMode::Closed);

// Three thin triangles meeting only at their common apex (0,7) on top of a
// trapezoid; realizes C_theta with the atom of 123 a single point.
Realization theta_figure_realization();

// Closed realization of the sunflower code S_n: planar for n = 2, in R^3 for
// 3 <= n <= 6.
Realization build_sunflower_realization(int n);

}  // namespace convexa

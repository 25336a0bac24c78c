#pragma once

#include "wsurf/contour.hpp"

namespace wsurf {

inline constexpr double kDefaultExclusionRadius = 0.02;
inline constexpr int kMaxWaypoints = 8;

/// Shortest admissible polyline from `from` to `to` (at most kMaxWaypoints
/// points), found on the visibility graph of octagons circumscribing each
/// exclusion disc and each cut anchor. Endpoints may sit exactly on a disc
/// centre but not elsewhere inside a disc.
/// Throws Error(PathPlanningFailure) when no such path exists.
ContourPath plan_path(cplx from, cplx to, const Obstacles& obstacles);

} // namespace wsurf

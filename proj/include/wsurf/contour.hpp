#pragma once

#include <vector>

#include "wsurf/errors.hpp"

namespace wsurf {

struct ExcludedDisc {
    cplx center;
    double radius;
};

/// Half-line anchor + t*direction, t >= 0. Points lying exactly on the ray are
/// treated as belonging to its clockwise side (the side principal logarithms
/// take their boundary values from).
struct CutRay {
    cplx anchor;
    cplx direction; ///< unit modulus
};

struct Obstacles {
    std::vector<ExcludedDisc> discs;
    std::vector<CutRay> cuts;
};

/// Side of the cut line: +1 counter-clockwise side, -1 clockwise side or on it.
int cut_side(const CutRay& cut, cplx p);

bool segment_crosses_cut(cplx a, cplx b, const CutRay& cut);

double distance_to_segment(cplx c, cplx a, cplx b);

/// A segment may start or end exactly at a disc centre (an integrable endpoint
/// singularity); otherwise it must keep at least `radius` from every centre.
/// Endpoints strictly inside a disc but off-centre are allowed only when
/// `allow_inside_endpoints` is set, and the segment must then approach that
/// centre monotonically.
bool segment_admissible(cplx a, cplx b, const Obstacles& obstacles, bool allow_inside_endpoints = false);

bool point_excluded(cplx p, const Obstacles& obstacles);

/// Piecewise-linear contour with the obstacle metadata it was planned against.
class ContourPath {
public:
    ContourPath() = default;

    /// Validates the invariants; throws Error(PathPlanningFailure) on violation.
    ContourPath(std::vector<cplx> waypoints, Obstacles obstacles, bool allow_inside_endpoints = false);

    static ContourPath straight(cplx a, cplx b) { return ContourPath({a, b}, {}); }

    const std::vector<cplx>& waypoints() const noexcept { return waypoints_; }
    const Obstacles& obstacles() const noexcept { return obstacles_; }
    std::size_t segment_count() const noexcept { return waypoints_.empty() ? 0 : waypoints_.size() - 1; }
    cplx start() const { return waypoints_.front(); }
    cplx end() const { return waypoints_.back(); }
    double length() const;

    /// True when the waypoint coincides with a disc centre; the quadrature then
    /// switches to an endpoint-regularising parametrisation.
    bool singular_waypoint(std::size_t index) const;

    ContourPath reversed() const;

private:
    std::vector<cplx> waypoints_;
    Obstacles obstacles_;
};

} // namespace wsurf

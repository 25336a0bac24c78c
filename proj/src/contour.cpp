#include "wsurf/contour.hpp"

#include "wsurf/complex_kernel.hpp"

#include <algorithm>
#include <cmath>

namespace wsurf {

namespace {

bool coincide(cplx a, cplx b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

double line_coordinate(const CutRay& cut, cplx p) { return (std::conj(cut.direction) * (p - cut.anchor)).imag(); }

} // namespace

int cut_side(const CutRay& cut, cplx p) { return line_coordinate(cut, p) > 0.0 ? 1 : -1; }

bool segment_crosses_cut(cplx a, cplx b, const CutRay& cut) {
    if (cut_side(cut, a) == cut_side(cut, b)) return false;
    const double va = line_coordinate(cut, a);
    const double vb = line_coordinate(cut, b);
    const double s = va / (va - vb);
    const cplx hit = a + s * (b - a);
    if (coincide(hit, cut.anchor)) return false;
    const double t = (std::conj(cut.direction) * (hit - cut.anchor)).real();
    return t > 0.0;
}

double distance_to_segment(cplx c, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(c - a);
    const double t = std::clamp((std::conj(ab) * (c - a)).real() / len2, 0.0, 1.0);
    return std::abs(c - (a + t * ab));
}

bool segment_admissible(cplx a, cplx b, const Obstacles& obstacles, bool allow_inside_endpoints) {
    for (const auto& cut : obstacles.cuts)
        if (segment_crosses_cut(a, b, cut)) return false;
    for (const auto& disc : obstacles.discs) {
        const bool at_a = coincide(a, disc.center);
        const bool at_b = coincide(b, disc.center);
        if (at_a && at_b) return false;
        if (at_a || at_b) continue;
        const double d = distance_to_segment(disc.center, a, b);
        if (d >= disc.radius) continue;
        if (!allow_inside_endpoints) return false;
        const double da = std::abs(a - disc.center);
        const double db = std::abs(b - disc.center);
        const double nearest = std::min(da, db);
        if (nearest >= disc.radius || d <= 0.0) return false;
        if (d < nearest * (1.0 - 1e-12)) return false;
    }
    return true;
}

bool point_excluded(cplx p, const Obstacles& obstacles) {
    return std::any_of(obstacles.discs.begin(), obstacles.discs.end(),
                       [&](const ExcludedDisc& d) { return std::abs(p - d.center) < d.radius; });
}

ContourPath::ContourPath(std::vector<cplx> waypoints, Obstacles obstacles, bool allow_inside_endpoints)
    : waypoints_(std::move(waypoints)), obstacles_(std::move(obstacles)) {
    if (waypoints_.size() < 2) throw Error(ErrorCode::PathPlanningFailure, "contour needs at least two waypoints");
    for (std::size_t i = 0; i + 1 < waypoints_.size(); ++i) {
        const cplx a = waypoints_[i], b = waypoints_[i + 1];
        if (!is_finite(a) || !is_finite(b))
            throw Error(ErrorCode::PathPlanningFailure, "non-finite waypoint");
        if (a == b) throw Error(ErrorCode::PathPlanningFailure, "consecutive waypoints coincide");
        if (!segment_admissible(a, b, obstacles_, allow_inside_endpoints))
            throw Error(ErrorCode::PathPlanningFailure,
                        "segment " + format_complex(a) + " -> " + format_complex(b) + " violates an obstacle");
    }
}

double ContourPath::length() const {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < waypoints_.size(); ++i) total += std::abs(waypoints_[i + 1] - waypoints_[i]);
    return total;
}

bool ContourPath::singular_waypoint(std::size_t index) const {
    const cplx w = waypoints_.at(index);
    return std::any_of(obstacles_.discs.begin(), obstacles_.discs.end(),
                       [&](const ExcludedDisc& d) { return coincide(w, d.center); });
}

ContourPath ContourPath::reversed() const {
    ContourPath out;
    out.waypoints_.assign(waypoints_.rbegin(), waypoints_.rend());
    out.obstacles_ = obstacles_;
    return out;
}

} // namespace wsurf

#include "wsurf/path_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wsurf/complex_kernel.hpp"

namespace wsurf {

namespace {

bool at_centre(cplx p, const ExcludedDisc& d) { return std::abs(p - d.center) <= 1e-12 * std::max(1.0, std::abs(d.center)); }

void require_outside(cplx p, const Obstacles& obs, const char* which) {
    for (const auto& d : obs.discs)
        if (!at_centre(p, d) && std::abs(p - d.center) < d.radius)
            throw Error(ErrorCode::PathPlanningFailure,
                        std::string(which) + " point " + format_complex(p) + " lies inside an exclusion disc");
}

void add_octagon(std::vector<cplx>& nodes, cplx centre, double radius, double phase, const Obstacles& obs) {
    // Circumscribe the disc so every octagon edge keeps clear of it.
    const double rv = radius * 1.08 / std::cos(kPi / 8.0);
    for (int k = 0; k < 8; ++k) {
        const cplx v = centre + std::polar(rv, phase + k * kPi / 4.0);
        if (!point_excluded(v, obs)) nodes.push_back(v);
    }
}

} // namespace

ContourPath plan_path(cplx from, cplx to, const Obstacles& obstacles) {
    if (!is_finite(from) || !is_finite(to)) throw Error(ErrorCode::PathPlanningFailure, "non-finite endpoint");
    if (from == to) throw Error(ErrorCode::PathPlanningFailure, "path endpoints coincide");
    require_outside(from, obstacles, "start");
    require_outside(to, obstacles, "end");
    if (segment_admissible(from, to, obstacles)) return ContourPath({from, to}, obstacles);

    std::vector<cplx> nodes = {from, to};
    for (const auto& d : obstacles.discs) {
        double phase = kPi / 8.0;
        for (const auto& c : obstacles.cuts)
            if (std::abs(c.anchor - d.center) < 1e-12) phase = std::arg(c.direction) + kPi / 8.0;
        add_octagon(nodes, d.center, d.radius, phase, obstacles);
    }
    for (const auto& c : obstacles.cuts) {
        const bool covered = std::any_of(obstacles.discs.begin(), obstacles.discs.end(),
                                         [&](const ExcludedDisc& d) { return std::abs(c.anchor - d.center) < 1e-12; });
        if (!covered) add_octagon(nodes, c.anchor, kDefaultExclusionRadius, std::arg(c.direction) + kPi / 8.0, obstacles);
    }

    const std::size_t n = nodes.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, inf);
    std::vector<std::size_t> prev(n, n);
    std::vector<char> done(n, 0);
    dist[0] = 0.0;
    for (;;) {
        std::size_t u = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && dist[i] < inf && (u == n || dist[i] < dist[u])) u = i;
        if (u == n || u == 1) break;
        done[u] = 1;
        for (std::size_t v = 0; v < n; ++v) {
            if (done[v] || v == u) continue;
            const double w = std::abs(nodes[v] - nodes[u]);
            if (dist[u] + w >= dist[v]) continue;
            if (!segment_admissible(nodes[u], nodes[v], obstacles)) continue;
            dist[v] = dist[u] + w;
            prev[v] = u;
        }
    }
    if (dist[1] == inf)
        throw Error(ErrorCode::PathPlanningFailure,
                    "no admissible path from " + format_complex(from) + " to " + format_complex(to));
    std::vector<cplx> waypoints;
    for (std::size_t v = 1; v != n; v = prev[v]) {
        waypoints.push_back(nodes[v]);
        if (v == 0) break;
    }
    std::reverse(waypoints.begin(), waypoints.end());
    if (int(waypoints.size()) > kMaxWaypoints)
        throw Error(ErrorCode::PathPlanningFailure, "detour needs more than " + std::to_string(kMaxWaypoints) + " waypoints");
    return ContourPath(std::move(waypoints), obstacles);
}

} // namespace wsurf

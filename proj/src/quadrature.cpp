#include "wsurf/quadrature.hpp"

namespace wsurf {

std::vector<detail::Segment> path_segments(const ContourPath& path) {
    using detail::SegmentMap;
    std::vector<detail::Segment> segments;
    const auto& w = path.waypoints();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const bool s0 = path.singular_waypoint(i);
        const bool s1 = path.singular_waypoint(i + 1);
        SegmentMap map = SegmentMap::Linear;
        if (s0 && s1) map = SegmentMap::SingularBoth;
        else if (s0) map = SegmentMap::SingularStart;
        else if (s1) map = SegmentMap::SingularEnd;
        segments.push_back({w[i], w[i + 1], map});
    }
    return segments;
}

cplx contour_quad(const ComplexFn& f, const ContourPath& path, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "contour_quad: tolerance must be positive");
    QuadOptions opt;
    opt.abs_tol = tol;
    const auto result = integrate_path<cplx>(f, path, opt);
    if (!result.converged) throw ToleranceNotReached(result.value, result.error);
    return result.value;
}

} // namespace wsurf

#pragma once

#include <string>
#include <vector>

#include "wsurf/geometry.hpp"

namespace wsurf {

/// Parameter grid. Polar nodes are r e^{i theta} (negative radii are allowed and
/// land on theta + pi); cartesian nodes are x + iy. Node (i, j) has i along the
/// first coordinate (r or x) and j along the second (theta or y).
struct GridSpec {
    DomainSpec::Kind kind = DomainSpec::Kind::Polar;
    double a0 = 0.0, a1 = 1.0;
    double b0 = 0.0, b1 = 1.0;
    int n1 = 2, n2 = 2;

    cplx node(int i, int j) const;
    std::size_t size() const { return std::size_t(n1) * std::size_t(n2); }
    /// Throws Error(InvalidArgument) on empty ranges or fewer than 2 nodes per axis.
    void validate() const;
};

/// "polar:r0,r1,t0,t1,n1,n2" or "cartesian:x0,x1,y0,y1,n1,n2"; the node counts
/// default to 60 when omitted. Throws Error(ParseError).
GridSpec parse_grid(const std::string& text);
GridSpec grid_from_domain(const DomainSpec& d, int n1 = 60, int n2 = 60);
std::string to_string(const GridSpec& g);

struct ImmersionSample {
    int i = 0, j = 0;
    cplx z{0.0};
    Point3 F{};
    Matrix2C Ftilde;
    Matrix2C Fst;
    cplx chi{0.0};
    double u = 0.0;
    cplx Q{0.0};
    bool has_geometry = false; ///< false when the stencil did not fit
    GeometryReport geometry{};
};

enum class NodeStatus { Ok, Excluded, OutsideRegion, Failed };

const char* to_string(NodeStatus s) noexcept;

struct GridResult {
    GridSpec spec;
    cplx xi0{0.0};
    std::vector<NodeStatus> status;       ///< row-major, size n1*n2
    std::vector<std::string> errors;      ///< per node, empty unless Failed
    std::vector<ImmersionSample> samples; ///< accepted nodes in row-major order
    std::size_t failed = 0, excluded = 0, outside_region = 0;

    NodeStatus at(int i, int j) const { return status[std::size_t(i) * spec.n2 + j]; }
};

struct SampleOptions {
    bool geometry = true;
    double exclusion_radius = 0.02;
    /// Worker threads for the row sweeps (0 = hardware concurrency). The
    /// result does not depend on it.
    unsigned threads = 0;
};

/// Immersion over the grid: one chord integral per node (spine along the first
/// column, then each row). Nodes inside exclusion discs or outside the
/// equation's admissible region are masked; per-node failures are recorded.
/// Throws Error(EvaluationFailure) if more than half the nodes fail.
GridResult sample_grid(const WeierstrassData& data, cplx xi0, const GridSpec& grid, const SampleOptions& opt = {});

/// Single point, path planned from xi0. Throws Error(DomainError) outside the
/// equation's admissible region.
ImmersionSample sample_point(const WeierstrassData& data, cplx xi0, cplx xi, bool geometry = true);

} // namespace wsurf

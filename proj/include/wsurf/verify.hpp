#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsurf/grid.hpp"

namespace wsurf {

struct ResidualEntry {
    std::string name;
    double value = 0.0; ///< worst case over the samples
    double threshold = 0.0;
    cplx worst_point{0.0};
    std::size_t samples = 0;

    bool pass() const { return value <= threshold; }
};

struct VerifyOptions {
    int samples = 20;
    std::uint64_t seed = 20240601;
    /// Minimum distance of sample points from singularities.
    double clearance = 0.05;
};

/// Sample points in the equation's default domain: away from singularities and
/// cuts, inside the admissible region. Deterministic for a given seed.
std::vector<cplx> verification_points(const LinearODE& ode, int count, std::uint64_t seed, double clearance = 0.05);

/// Full residual suite: coefficient identities, holomorphy, zero curvature,
/// linear problem, geometry, Sym-Tafel, quaternionic identity, path
/// independence. Residuals are relative where noted in their names.
std::vector<ResidualEntry> run_verify_suite(const WeierstrassData& data, cplx xi0, const VerifyOptions& opt = {});

} // namespace wsurf

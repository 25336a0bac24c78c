#pragma once

#include "wsurf/immersion.hpp"

namespace wsurf {

/// Finite-difference geometry of the immersion around one parameter point.
/// Every quantity is computed from F itself (9x9 lattice of J integrals from
/// the centre, fourth-order central differences).
struct GeometryReport {
    cplx z;
    double h;           ///< lattice step
    double u;           ///< log(2 (dF|dbar F)) from the differenced F
    double u_data;      ///< from the data: e^{u/2} = |eta|^2 (1 + |chi|^2) / 2
    cplx Q;             ///< (d^2 F | N)
    cplx Q_data;        ///< -eta^2 d chi / 2
    Point3 normal;
    double H;           ///< 2 e^{-u} (d dbar F | N)

    double conformality;    ///< |(dF|dF)|
    double metric;          ///< |(dF|dbar F) - e^{u_data}/2|
    double hopf;            ///< |Q - Q_data| / max(1, |Q_data|)
    double hopf_holomorphy; ///< |dbar Q| / max(1, |Q|)
    double liouville;       ///< |d dbar u - 2|Q|^2 e^{-u}| / max(1, 2|Q|^2 e^{-u})

    /// Residuals against the unhalved normalisation e^{u/2} = |eta|^2 (1 + |chi|^2)
    /// and Q = -eta^2 d chi; nonzero for valid data, reported for comparison.
    double metric_unhalved;
    double hopf_unhalved;
};

/// Default lattice step 1e-3 * min(1, distance to the nearest singularity).
double default_geometry_step(const WeierstrassData& data, cplx z);

/// Throws Error(StencilOutsideDomain) when a lattice point is excluded or not
/// reachable from the centre without crossing a cut. `h` <= 0 picks the default.
GeometryReport geometry_report(const WeierstrassData& data, cplx z, double h = 0.0);
GeometryReport geometry_report(const LocalChart& chart, const WeierstrassData& data, double h = 0.0);

} // namespace wsurf

#pragma once

#include <memory>
#include <vector>

#include "wsurf/ode_catalog.hpp"
#include "wsurf/runge_kutta.hpp"

namespace wsurf {

enum class DataSource { ClosedForm, Numeric };

const char* to_string(DataSource s) noexcept;

struct DataValue {
    cplx eta_sq;
    cplx chi;
    /// Continuous logarithm of eta^2 along the integration path (numeric data).
    cplx log_eta_sq;
};

/// J1 = int eta^2, J2 = int chi eta^2, J3 = int chi^2 eta^2 along a path.
struct PathIntegrals {
    cplx j1{0.0}, j2{0.0}, j3{0.0};

    PathIntegrals& operator+=(const PathIntegrals& o) {
        j1 += o.j1, j2 += o.j2, j3 += o.j3;
        return *this;
    }
};

inline PathIntegrals operator-(PathIntegrals a, const PathIntegrals& b) {
    a.j1 -= b.j1, a.j2 -= b.j2, a.j3 -= b.j3;
    return a;
}

struct TrackedIntegrals {
    PathIntegrals integrals;
    DataValue end; ///< data at the path end; NaN when the end is a singular point
};

class LocalChart;

/// Weierstrass data (eta^2, chi) with its constants. Immutable and safe to
/// evaluate from several threads.
class WeierstrassData {
public:
    struct Impl;

    /// Closed-form data. `singularities`/`obstacles` describe where the
    /// functions may not be evaluated and which cuts paths must respect.
    static WeierstrassData from_functions(ComplexFn eta_sq, ComplexFn chi, const Constants& k, cplx base_point,
                                          Obstacles obstacles = {});

    /// Integrates eta^2 = eta^2(z0) exp(-int q/p) and
    /// chi = chi(z0) - (1/lambda) int (r/p)/eta^2 numerically from the base point.
    static WeierstrassData numeric(ODEPtr ode, const Constants& k, const StepControl& ctl = {});

    /// Closed-form override for cataloged equations; throws Error(InvalidArgument)
    /// when the equation has no closed form for its parameters.
    static WeierstrassData closed_form(ODEPtr ode, const Constants& k, double tol = 0.0);

    DataSource source() const;
    const Constants& constants() const;
    cplx base_point() const;
    const Obstacles& obstacles() const;
    /// Null for data built directly from functions.
    const LinearODE* ode() const;
    ODEPtr ode_ptr() const;

    /// Value at z reached along the planned path from the base point.
    DataValue value(cplx z) const;
    /// Value at b given the value at a, integrating along the straight segment.
    /// `fixed_steps` > 0 switches to a non-adaptive rule with that many steps.
    DataValue advance(const DataValue& at_a, cplx a, cplx b, int fixed_steps = 0) const;

    /// Like advance for b on the segment from a toward the singular point s,
    /// integrating in log-distance to s so that regular singular points are
    /// approached with bounded step counts.
    DataValue advance_toward(const DataValue& at_a, cplx a, cplx s, cplx b) const;

    cplx eta_sq(cplx z) const { return value(z).eta_sq; }
    cplx chi(cplx z) const { return value(z).chi; }
    ComplexFn eta_sq_fn() const;
    ComplexFn chi_fn() const;

    /// Evaluator for points near `center`, each reached by a straight hop from
    /// the centre with a fixed (non-adaptive) rule, so values vary smoothly
    /// with the point. Only meant for hops short compared with the distance
    /// to the nearest singularity (finite-difference stencils).
    LocalChart chart(cplx center) const;
    LocalChart chart(cplx center, const DataValue& at_center) const;

    /// J integrals along a straight segment starting from known data.
    TrackedIntegrals integrate_segment(const DataValue& at_a, cplx a, cplx b, int fixed_steps = 0) const;
    /// J integrals along a path; the start may be a singular centre.
    TrackedIntegrals integrate_path(const ContourPath& path) const;
    TrackedIntegrals integrate_path(const ContourPath& path, const DataValue& at_start) const;

    /// True when z coincides with a disc centre (a declared singularity).
    bool is_singular(cplx z) const;

private:
    friend WeierstrassData build_weierstrass(ODEPtr ode, const Constants& k, DataSource source, double tol);
    std::shared_ptr<const Impl> impl_;
};

class LocalChart {
public:
    LocalChart(const WeierstrassData& data, cplx center, DataValue at_center)
        : data_(data), center_(center), at_center_(at_center) {}

    static constexpr int kHopSteps = 2;

    DataValue value(cplx w) const {
        return w == center_ ? at_center_ : data_.advance(at_center_, center_, w, kHopSteps);
    }
    cplx eta_sq(cplx w) const { return value(w).eta_sq; }
    cplx chi(cplx w) const { return value(w).chi; }
    ComplexFn eta_sq_fn() const {
        return [c = *this](cplx w) { return c.eta_sq(w); };
    }
    ComplexFn chi_fn() const {
        return [c = *this](cplx w) { return c.chi(w); };
    }
    cplx center() const { return center_; }
    const DataValue& at_center() const { return at_center_; }
    /// J integrals from the centre to w along the straight segment.
    PathIntegrals integrals_to(cplx w) const {
        return w == center_ ? PathIntegrals{} : data_.integrate_segment(at_center_, center_, w, kHopSteps).integrals;
    }

private:
    WeierstrassData data_;
    cplx center_;
    DataValue at_center_;
};

/// `tol` > 0 overrides the default integration tolerances (relative 1e-12 for
/// the path ODE, 1e-13 for quadrature).
WeierstrassData build_weierstrass(ODEPtr ode, const Constants& k, DataSource source, double tol = 0.0);

/// Evaluable eta^2 (and chi) built from the equation.
ComplexFn build_eta(ODEPtr ode, const Constants& k, DataSource source = DataSource::Numeric);
ComplexFn build_chi(ODEPtr ode, const Constants& k, DataSource source = DataSource::Numeric);

struct WeierstrassReport {
    double eta_residual = 0.0;   ///< max |q/p + d(eta^2)/eta^2|
    double chi_residual = 0.0;   ///< max |r/p + lambda eta^2 d chi|
    double eta_holomorphy = 0.0; ///< max |dbar eta^2|
    double chi_holomorphy = 0.0; ///< max |dbar chi|
    cplx worst_eta_point{0.0}, worst_chi_point{0.0};
    std::size_t samples = 0;
};

/// Checks the coefficient identities q/p = -2 d eta / eta and
/// r/p = -lambda eta^2 d chi by finite differences at every sample.
WeierstrassReport verify_weierstrass(const WeierstrassData& data, const LinearODE& ode, const std::vector<cplx>& samples);

} // namespace wsurf

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wsurf/complex_kernel.hpp"
#include "wsurf/contour.hpp"
#include "wsurf/expression.hpp"

namespace wsurf {

/// Integration constants and spectral parameter of the Weierstrass data.
struct Constants {
    cplx c1{1.0};
    cplx c2{0.0};
    cplx lambda{1.0};
};

struct ClosedForm {
    ComplexFn eta_sq;
    ComplexFn chi;
};

/// eta^2 and chi at the integration base point.
struct BaseValues {
    cplx eta_sq;
    cplx chi;
};

struct DomainSpec {
    enum class Kind { Polar, Cartesian };
    Kind kind = Kind::Polar;
    double a0 = 0.0, a1 = 1.0; ///< r or x range
    double b0 = 0.0, b1 = 1.0; ///< theta or y range
};

struct ParamSpec {
    std::string name;
    cplx default_value;
    std::string description;
};

/// p(z) w'' + q(z) w' + r(z) w = 0 plus everything needed to integrate it.
struct LinearODE {
    std::string id;
    std::string title;
    std::vector<ParamSpec> schema;
    ParamMap params;
    ComplexFn p, q, r;
    std::vector<cplx> singularities;
    /// Branch cuts of the multivalued data and its integrals; paths never cross them.
    std::vector<CutRay> cuts;
    cplx base_point{0.0};
    DomainSpec default_domain;
    /// Optional admissibility predicate (Jacobi); empty means everywhere.
    std::function<bool(cplx)> valid_region;
    std::string valid_region_text;
    bool nonstandard_form = false;
    std::string note;

    /// Figure defaults; also used by the CLI when flags are omitted.
    Constants default_constants;
    cplx default_xi0{0.0};

    /// Closed-form eta^2 and chi, when the data is expressible in principal-branch
    /// elementary functions for these parameters.
    std::function<std::optional<ClosedForm>(const Constants&)> closed_form;
    /// Values at base_point used to seed numeric integration. Falls back to
    /// (c1, c2/lambda) when empty.
    std::function<BaseValues(const Constants&)> base_values;

    bool in_valid_region(cplx z) const { return !valid_region || valid_region(z); }
    cplx param(const std::string& name) const;
    BaseValues base_values_for(const Constants& k) const;
    Obstacles obstacles(double radius = 0.02) const;
};

using ODEPtr = std::shared_ptr<const LinearODE>;

/// Catalog ids in display order.
const std::vector<std::string>& equation_ids();

/// Builds a cataloged equation; `params` override the defaults.
/// Throws Error(UnknownEquation) for unknown ids and Error(InvalidArgument) for
/// unknown parameter names.
ODEPtr get_equation(const std::string& id, const ParamMap& params = {});

struct CoefficientRatios {
    cplx q_over_p;
    cplx r_over_p;
};

/// Throws SingularPoint when z is a declared singularity or p(z) vanishes.
CoefficientRatios coefficient_ratios(const LinearODE& ode, cplx z);

/// User-defined equation from a flat `key = value` text. Recognised keys:
///   id, p, q, r, base_point, singularities (comma separated complex literals),
///   cut (anchor and direction separated by whitespace; repeatable),
///   param.<name> (complex literal), domain (grid-style "polar:r0,r1,t0,t1" or
///   "cartesian:x0,x1,y0,y1").
/// Singularities without an explicit cut get a ray pointing away from the base
/// point so that the punctured plane is cut down to a simply connected region.
ODEPtr parse_user_ode(const std::string& text, const ParamMap& overrides = {});
ODEPtr load_user_ode(const std::string& path, const ParamMap& overrides = {});

} // namespace wsurf

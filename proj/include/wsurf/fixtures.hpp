#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "wsurf/immersion.hpp"

namespace wsurf {

/// Figure surface with fixed parameters and an elementary closed form.
/// F(xi) = Re(G(xi) - G(xi0)) componentwise.
struct ClosedFormFixture {
    int figure = 0;
    std::string equation;
    ParamMap params;
    Constants constants;
    cplx xi0{0.0};
    DomainSpec domain;
    int n1 = 60, n2 = 60;
    std::function<std::array<cplx, 3>(cplx)> potential;
    /// Where the closed form and the integrated surface are expected to agree
    /// (same sheet of every multivalued term). Empty means the whole domain.
    std::function<bool(cplx)> same_sheet;
    std::string note;

    bool in_domain(cplx z) const;
    ODEPtr equation_ptr() const;
};

struct ExcludedFixture {
    int figure;
    std::string equation;
    std::string reason;
};

const std::vector<ClosedFormFixture>& closed_form_fixtures();
const std::vector<ExcludedFixture>& excluded_fixtures();
/// Throws Error(InvalidArgument) when the figure has no closed-form fixture.
const ClosedFormFixture& fixture_for_figure(int figure);

/// Throws Error(OutsideFixtureDomain) outside the figure domain or on a cut of
/// the closed form.
Point3 reference_surface(const ClosedFormFixture& fixture, cplx xi);

/// Closed-form quaternionic immersion of the Laguerre fixture (alpha = 1,
/// lambda = 1, c1 = 1, c2 = 0): built from Delta Ei(z), Delta log z, Delta Ei(-z).
Matrix2C laguerre_reference_quaternionic(cplx xi0, cplx xi);

} // namespace wsurf

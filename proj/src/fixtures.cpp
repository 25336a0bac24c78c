#include "wsurf/fixtures.hpp"

namespace wsurf {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * kPi;

DomainSpec polar(double r0, double r1, double t0, double t1) { return {DomainSpec::Kind::Polar, r0, r1, t0, t1}; }

// log(z - 1) taking its upper-side values on the real segment z < 1.
cplx log_z_minus_one(cplx z) {
    const cplx w = z - 1.0;
    return std::log(cplx(w.real(), w.imag() == 0.0 ? 0.0 : w.imag()));
}

ClosedFormFixture make(int figure, std::string eq, ParamMap params, Constants k, cplx xi0, DomainSpec domain) {
    ClosedFormFixture f;
    f.figure = figure;
    f.equation = std::move(eq);
    f.params = std::move(params);
    f.constants = k;
    f.xi0 = xi0;
    f.domain = domain;
    return f;
}

std::vector<ClosedFormFixture> make_fixtures() {
    std::vector<ClosedFormFixture> out;

    ClosedFormFixture lag = make(1, "laguerre", {{"alpha", 1.0}}, {1.0, 0.0, 1.0}, cplx(1.0, 1.0), polar(0.02, 3.0, 0.0, kTwoPi));
    lag.potential = [](cplx z) {
        const cplx ep = expint_ei(z), em = expint_ei(-z);
        return std::array<cplx, 3>{0.5 * (ep - em), 0.5 * kI * (ep + em), principal_log(z)};
    };
    // Ei(-z) is cut along the positive axis; the integrated surface is cut along
    // the negative one. They share a sheet in the upper half plane.
    lag.same_sheet = [](cplx z) { return z.imag() > 0.0; };
    lag.note = "negative radii folded onto theta + pi";
    out.push_back(lag);

    ClosedFormFixture leg = make(2, "legendre", {{"alpha", 1.0}}, {1.0, 0.0, -2.0}, cplx(0.5, 1.0), polar(0.02, 8.0, 0.0, 3.0 * kTwoPi));
    leg.potential = [](cplx z) {
        return std::array<cplx, 3>{0.5 * z, 0.5 * kI * (principal_log(1.0 + z) - principal_log(1.0 - z) - z),
                                   -0.5 * principal_log(1.0 - z * z)};
    };
    out.push_back(leg);

    ClosedFormFixture bes = make(3, "bessel", {{"p", 0.0}}, {1.0, 0.0, -0.5}, 1.0, polar(0.01, 2.0, 0.0, kTwoPi));
    bes.potential = [](cplx z) {
        const cplx l = principal_log(z), z4 = z * z * z * z / 4.0;
        return std::array<cplx, 3>{0.5 * (l - z4), 0.5 * kI * (l + z4), 0.5 * z * z};
    };
    out.push_back(bes);

    ClosedFormFixture che = make(4, "chebyshev1", {{"n", 1.0}}, {1.0, 0.0, -1.0}, 1.0, polar(0.02, 10.0, 0.0, kTwoPi));
    che.potential = [](cplx z) {
        const cplx a = principal_arcsin(z), a3 = a * a * a / 3.0;
        return std::array<cplx, 3>{0.5 * (a - a3), 0.5 * kI * (a + a3), 0.5 * a * a};
    };
    out.push_back(che);

    ClosedFormFixture geg = make(7, "gegenbauer", {{"alpha", 0.5}, {"n", 1.0}}, {1.0, 0.0, 1.0}, 0.0, polar(0.01, 10.0, 0.0, kTwoPi));
    geg.potential = [](cplx z) {
        return std::array<cplx, 3>{-principal_log((1.0 - z) * (1.0 + z)),
                                   kI * (principal_log(1.0 + z) - principal_log(1.0 - z) - z), z};
    };
    geg.note = "first-derivative coefficient without the usual factor z";
    out.push_back(geg);

    ClosedFormFixture jac = make(8, "jacobi", {{"alpha", 1.0}, {"beta", 2.0}, {"n", 1.0}}, {1.0, 0.0, -1.0}, 0.0,
                                     {DomainSpec::Kind::Cartesian, -1.0 + 0.01, 0.0, 0.0, 1.0 - 0.01});
    jac.potential = [](cplx z) {
        const cplx lm = log_z_minus_one(z);
        const cplx a = (-6.0 * z * (z + 1.0) + 4.0) / ((z - 1.0) * (z + 1.0) * (z + 1.0)) +
                       3.0 * (principal_log(z + 1.0) - lm);
        const cplx b = 25.0 / 9.0 *
                       (2.25 * z * z * z * z + 5.0 * z * z * z - 8.5 * z * z - 55.0 * z + 32.0 / (1.0 - z) - 48.0 * lm + 56.25);
        return std::array<cplx, 3>{(a - b) / 32.0, kI * (a + b) / 32.0, -5.0 / 12.0 * (2.0 / (z - 1.0) + 3.0 * lm)};
    };
    jac.note = "log(z - 1) on the upper side of its cut";
    out.push_back(jac);
    return out;
}

} // namespace

bool ClosedFormFixture::in_domain(cplx z) const {
    constexpr double slack = 1e-12;
    if (domain.kind == DomainSpec::Kind::Polar) {
        const double r = std::abs(z);
        return r >= domain.a0 - slack && r <= domain.a1 + slack;
    }
    return z.real() >= domain.a0 - slack && z.real() <= domain.a1 + slack && z.imag() >= domain.b0 - slack &&
           z.imag() <= domain.b1 + slack;
}

ODEPtr ClosedFormFixture::equation_ptr() const { return get_equation(equation, params); }

const std::vector<ClosedFormFixture>& closed_form_fixtures() {
    static const std::vector<ClosedFormFixture> fixtures = make_fixtures();
    return fixtures;
}

const std::vector<ExcludedFixture>& excluded_fixtures() {
    static const std::vector<ExcludedFixture> list = {
        {0, "legendre_assoc", "reference constants carry a decimal-comma artifact (7,225); not used as an oracle"},
        {5, "laguerre_assoc", "reference closed form disagrees with the data at its own constants"},
        {6, "hermite", "reference closed form needs 2F2(1,1;3/2,2;z^2), outside the implemented special functions"},
    };
    return list;
}

const ClosedFormFixture& fixture_for_figure(int figure) {
    for (const auto& f : closed_form_fixtures())
        if (f.figure == figure) return f;
    throw Error(ErrorCode::InvalidArgument, "no closed-form fixture for figure " + std::to_string(figure));
}

Point3 reference_surface(const ClosedFormFixture& fixture, cplx xi) {
    if (!fixture.in_domain(xi))
        throw Error(ErrorCode::OutsideFixtureDomain, format_complex(xi) + " is outside the fixture domain");
    std::array<cplx, 3> g, g0;
    try {
        g = fixture.potential(xi);
        g0 = fixture.potential(fixture.xi0);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BranchCutViolation || e.code() == ErrorCode::DomainError)
            throw Error(ErrorCode::OutsideFixtureDomain, std::string("closed form undefined: ") + e.what());
        throw;
    }
    for (int k = 0; k < 3; ++k)
        if (!is_finite(g[k])) throw Error(ErrorCode::OutsideFixtureDomain, "closed form not finite at " + format_complex(xi));
    return {(g[0] - g0[0]).real(), (g[1] - g0[1]).real(), (g[2] - g0[2]).real()};
}

Matrix2C laguerre_reference_quaternionic(cplx xi0, cplx xi) {
    const cplx e1 = expint_ei(xi) - expint_ei(xi0);
    const cplx e2 = expint_ei(-xi) - expint_ei(-xi0);
    const cplx l = principal_log(xi) - principal_log(xi0);
    const cplx s = -0.5 * kI;
    return {s * (l + std::conj(l)), s * (e1 - std::conj(e2)), s * (-e2 + std::conj(e1)), s * (-l - std::conj(l))};
}

} // namespace wsurf

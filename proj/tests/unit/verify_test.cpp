#include <doctest.h>

#include "wsurf/verify.hpp"

using namespace wsurf;

TEST_CASE("verification points keep clear of singular sets") {
    for (const auto& id : equation_ids()) {
        auto ode = get_equation(id);
        const auto pts = verification_points(*ode, 30, 11, 0.05);
        CHECK(pts.size() == 30);
        CHECK(pts == verification_points(*ode, 30, 11, 0.05));
        for (cplx z : pts) {
            for (cplx s : ode->singularities) CHECK(std::abs(z - s) >= 0.05);
            CHECK(ode->in_valid_region(z));
        }
    }
}

TEST_CASE("residual suite passes on every catalog equation") {
    for (const auto& id : equation_ids()) {
        auto ode = get_equation(id);
        for (DataSource src : {DataSource::Numeric, DataSource::ClosedForm}) {
            if (src == DataSource::ClosedForm && !(ode->closed_form && ode->closed_form(ode->default_constants))) continue;
            CAPTURE(id);
            CAPTURE(to_string(src));
            const auto d = build_weierstrass(ode, ode->default_constants, src);
            VerifyOptions opt;
            opt.samples = 8;
            for (const auto& e : run_verify_suite(d, ode->default_xi0, opt)) {
                CAPTURE(e.name);
                CAPTURE(e.value);
                CHECK(e.pass());
                CHECK(e.samples > 0);
            }
        }
    }
}

TEST_CASE("residual suite flags corrupted data") {
    auto lag = get_equation("laguerre", {{"alpha", 1.0}});
    // Data for alpha = 1.2 checked against the alpha = 1 equation.
    const auto other = build_weierstrass(get_equation("laguerre", {{"alpha", 1.2}}), {1.0, 0.0, 1.0}, DataSource::Numeric);
    const auto spoofed = WeierstrassData::from_functions(other.eta_sq_fn(), other.chi_fn(), {1.0, 0.0, 1.0}, 1.0,
                                                         lag->obstacles());
    const auto rep = verify_weierstrass(spoofed, *lag, verification_points(*lag, 6, 3));
    CHECK(rep.chi_residual > 1e-3);
}

#include <doctest.h>

#include <cmath>

#include "../frozen_values.hpp"
#include "wsurf/complex_kernel.hpp"
#include "wsurf/path_planner.hpp"
#include "wsurf/quadrature.hpp"

using namespace wsurf;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Brute-force series: gamma + log z + sum z^k / (k k!).
cplx ei_series(cplx z, int terms) {
    cplx sum = 0.0, term = 1.0;
    for (int k = 1; k <= terms; ++k) {
        term *= z / double(k);
        sum += term / double(k);
    }
    return kEulerGamma + std::log(z) + sum;
}

} // namespace

TEST_CASE("Ei against mpmath values") {
    for (const auto& p : frozen::kEi) CHECK(rel(expint_ei(p.z), p.value) < 1e-13);
}

TEST_CASE("Ei(2) against the power series") {
    CHECK(std::abs(expint_ei(2.0) - ei_series(2.0, 200)) < 1e-12);
    CHECK(std::abs(expint_ei(cplx(1.5, -2.0)) - ei_series(cplx(1.5, -2.0), 200)) < 1e-12);
}

TEST_CASE("Ei derivative is e^z/z") {
    const cplx z(1.0, 1.0);
    const auto d = holo_derivative(expint_ei, z);
    CHECK(std::abs(d.value - std::exp(z) / z) < 1e-10);
    CHECK(d.cr_residual < 1e-8);
}

TEST_CASE("Ei is continuous through the large-argument switch") {
    for (double r : {14.0, 20.0, 26.0, 32.0, 40.0})
        for (double t : {0.3, 1.5, 2.9}) {
            const cplx z = std::polar(r, t);
            CHECK(rel(expint_ei(z * (1.0 + 1e-9)), expint_ei(z)) < 1e-7);
        }
}

TEST_CASE("dilog, erf and arcsin against mpmath values") {
    for (const auto& p : frozen::kLi2) CHECK(rel(dilog(p.z), p.value) < 1e-12);
    for (const auto& p : frozen::kErf) CHECK(rel(erf_complex(p.z), p.value) < 1e-12);
    for (const auto& p : frozen::kArcsin) CHECK(rel(principal_arcsin(p.z), p.value) < 1e-13);
}

TEST_CASE("identity values") {
    CHECK(principal_log(1.0) == cplx(0.0));
    CHECK(principal_arcsin(0.0) == cplx(0.0));
    CHECK(std::abs(principal_sqrt(cplx(0.0, 2.0)) - cplx(1.0, 1.0)) < 1e-15);
    CHECK(std::abs(principal_pow(cplx(0.0, 1.0), 2.0) + 1.0) < 1e-15);
    CHECK(std::abs(eval_special(SpecialFn::Power, 8.0, 1.0 / 3.0) - 2.0) < 1e-14);
}

TEST_CASE("branch cuts raise BranchCutViolation") {
    CHECK_THROWS_AS(principal_log(-2.0), BranchCutViolation);
    CHECK_THROWS_AS(principal_sqrt(-1.0), BranchCutViolation);
    CHECK_THROWS_AS(expint_ei(-0.5), BranchCutViolation);
    CHECK_THROWS_AS(principal_arcsin(1.5), BranchCutViolation);
    CHECK_THROWS_AS(principal_arcsin(-3.0), BranchCutViolation);
    CHECK_THROWS_AS(dilog(2.0), BranchCutViolation);
    CHECK_NOTHROW(erf_complex(-5.0));
    CHECK_NOTHROW(principal_log(cplx(-2.0, 1e-300)));
    try {
        principal_log(-1.0);
    } catch (const BranchCutViolation& e) {
        CHECK(e.code() == ErrorCode::BranchCutViolation);
        CHECK(e.point() == cplx(-1.0));
    }
}

TEST_CASE("principal branches agree with std where std is principal") {
    for (cplx z : {cplx(0.3, 0.8), cplx(-2.0, 0.1), cplx(-2.0, -0.1), cplx(5.0, -3.0)}) {
        CHECK(std::abs(principal_log(z) - std::log(z)) < 1e-15);
        CHECK(std::abs(principal_sqrt(z) - std::sqrt(z)) < 1e-15);
    }
}

TEST_CASE("contour quadrature") {
    SUBCASE("constant integrand") {
        CHECK(std::abs(contour_quad([](cplx) { return cplx(1.0); }, ContourPath::straight(0.0, cplx(1.0, 1.0)), 1e-12) -
                       cplx(1.0, 1.0)) < 1e-13);
    }
    SUBCASE("1/z over the upper half circle") {
        std::vector<cplx> pts;
        for (int k = 0; k <= 64; ++k) pts.push_back(std::polar(1.0, kPi * k / 64.0));
        pts.back() = -1.0;
        const cplx v = contour_quad([](cplx z) { return 1.0 / z; }, ContourPath(pts, {}), 1e-12);
        CHECK(std::abs(v - cplx(0.0, kPi)) < 1e-11);
    }
    SUBCASE("e^z/z from 1 to 2 is Ei(2) - Ei(1)") {
        const cplx v = contour_quad([](cplx z) { return std::exp(z) / z; }, ContourPath::straight(1.0, 2.0), 1e-12);
        CHECK(std::abs(v - (expint_ei(2.0) - expint_ei(1.0))) < 1e-10);
    }
    SUBCASE("inverse square-root endpoint at a disc centre") {
        Obstacles obs;
        obs.discs.push_back({0.0, 0.02});
        const cplx v = contour_quad([](cplx z) { return 1.0 / std::sqrt(z); }, ContourPath({0.0, 1.0}, obs), 1e-12);
        CHECK(std::abs(v - 2.0) < 1e-11);
    }
    SUBCASE("unreachable tolerance reports the best estimate") {
        try {
            contour_quad([](cplx z) { return std::sin(1.0 / (z.real() + 1e-9)); }, ContourPath::straight(0.0, 1.0), 1e-15);
            FAIL("expected ToleranceNotReached");
        } catch (const ToleranceNotReached& e) {
            CHECK(is_finite(e.best_estimate()));
            CHECK(e.achieved_error() > 1e-15);
        }
    }
}

TEST_CASE("holomorphic derivatives") {
    const auto sq = holo_derivative([](cplx z) { return z * z; }, 3.0);
    CHECK(std::abs(sq.value - 6.0) < 1e-8);
    CHECK(sq.cr_residual <= 1e-8);
    const cplx z(1.0, 1.0);
    CHECK(std::abs(holo_derivative([](cplx w) { return std::exp(-w); }, z).value + std::exp(-z)) < 1e-8);
    CHECK(std::abs(holo_derivative([](cplx w) { return std::exp(-w); }, z, 2).value - std::exp(-z)) < 1e-6);
    // conj is nowhere holomorphic
    CHECK(holo_derivative([](cplx w) { return std::conj(w); }, z).cr_residual > 0.5);
}

TEST_CASE("path planning") {
    SUBCASE("free space is a straight segment") {
        const auto p = plan_path(0.0, cplx(2.0, 3.0), {});
        CHECK(p.waypoints().size() == 2);
    }
    SUBCASE("log cut forces a detour through Re > 0") {
        Obstacles obs;
        obs.discs.push_back({0.0, 0.02});
        obs.cuts.push_back({0.0, -1.0});
        const auto p = plan_path(cplx(-1.0, -0.5), cplx(-1.0, 0.5), obs);
        CHECK(p.waypoints().size() > 2);
        CHECK(int(p.waypoints().size()) <= kMaxWaypoints);
        bool right = false;
        for (cplx w : p.waypoints()) right = right || w.real() > 0.0;
        CHECK(right);
        for (std::size_t k = 0; k + 1 < p.waypoints().size(); ++k)
            CHECK(segment_admissible(p.waypoints()[k], p.waypoints()[k + 1], obs));
    }
    SUBCASE("deterministic") {
        Obstacles obs;
        obs.discs = {{1.0, 0.02}, {-1.0, 0.02}};
        obs.cuts = {{1.0, 1.0}, {-1.0, -1.0}};
        const auto a = plan_path(cplx(2.0, -0.5), cplx(-2.0, 0.5), obs);
        const auto b = plan_path(cplx(2.0, -0.5), cplx(-2.0, 0.5), obs);
        CHECK(a.waypoints() == b.waypoints());
    }
    SUBCASE("endpoint inside a disc is rejected") {
        Obstacles obs;
        obs.discs.push_back({0.0, 0.02});
        CHECK_THROWS_AS(plan_path(cplx(0.01, 0.0), 1.0, obs), Error);
    }
    SUBCASE("laguerre grid paths avoid the disc at 0") {
        Obstacles obs;
        obs.discs.push_back({0.0, 0.02});
        obs.cuts.push_back({0.0, -1.0});
        const cplx xi0(1.0, 1.0);
        int checked = 0;
        for (int i = 0; i < 100; ++i)
            for (int j = 0; j < 100; ++j) {
                const cplx xi = std::polar(0.05 + 2.95 * i / 99.0, 2.0 * kPi * j / 99.0);
                const auto p = plan_path(xi0, xi, obs);
                if ((i * 100 + j) % 100 != 7) continue;
                ++checked;
                for (std::size_t k = 0; k + 1 < p.waypoints().size(); ++k) {
                    CHECK(distance_to_segment(0.0, p.waypoints()[k], p.waypoints()[k + 1]) >= 0.02);
                    CHECK_FALSE(segment_crosses_cut(p.waypoints()[k], p.waypoints()[k + 1], obs.cuts[0]));
                }
            }
        CHECK(checked == 100);
    }
}

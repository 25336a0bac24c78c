// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Closed forms here are written out independently of src/fixtures.cpp.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "wsurf/complex_kernel.hpp"
#include "wsurf/fixtures.hpp"
#include "wsurf/grid.hpp"
#include "wsurf/immersion.hpp"
#include "wsurf/linear_problem.hpp"
#include "wsurf/path_planner.hpp"
#include "wsurf/verify.hpp"

#ifndef WSURF_CLI
#error "WSURF_CLI must name the command-line tool"
#endif

using namespace wsurf;
namespace fs = std::filesystem;

namespace {

// Tolerances.
constexpr double kTolGolden = 1e-8;
constexpr double kGoldenSeconds = 5.0;
constexpr double kTolQuaternionic = 1e-8;
constexpr double kTolTable = 1e-8; // times max(1, |reference|)
constexpr double kTolFigure = 1e-7;
constexpr double kTolLinearProblem = 1e-6;
constexpr double kTolLinearDbar = 1e-7;
constexpr double kTolConformal = 1e-5; // times e^u
constexpr double kTolMetric = 1e-5;    // times e^u
constexpr double kTolMeanCurvature = 1e-4;
constexpr double kTolHopfDbar = 1e-6;
constexpr double kTolLiouville = 1e-3;
constexpr double kGeometryClearance = 0.05;
constexpr double kTolSymTafel = 1e-12;
constexpr double kTolPaths = 1e-8;

constexpr cplx I{0.0, 1.0};
constexpr double kTwoPi = 2.0 * kPi;

int failures = 0;

void report(int n, bool pass, const std::string& what) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", n, what.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

void detail(const std::string& s) { std::printf("    %s\n", s.c_str()); }

std::string sci(double x) {
    char b[32];
    std::snprintf(b, sizeof b, "%.2e", x);
    return b;
}

double max_diff(const Point3& a, const Point3& b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

double dist_to_set(cplx z, const std::vector<cplx>& pts) {
    double d = INFINITY;
    for (cplx p : pts) d = std::min(d, std::abs(z - p));
    return d;
}

// --- Figures --------------------------------------------------------------

struct Figure {
    int number;
    std::string eq;
    ParamMap params;
    Constants k;
    cplx xi0;
    GridSpec grid; // 60 x 60 over the figure domain
    std::vector<cplx> singular;
    std::function<bool(cplx)> region; // domain restrictions beyond the grid box
    std::function<std::array<cplx, 3>(cplx)> g; // F_k = Re([g_k])
};

GridSpec polar(double r0, double r1, double t0, double t1) { return {DomainSpec::Kind::Polar, r0, r1, t0, t1, 60, 60}; }

std::vector<Figure> figures() {
    std::vector<Figure> f;
    // Figure 1 radius range [-3, 3] folded onto r >= 0.
    f.push_back({1, "laguerre", {{"alpha", 1.0}}, {1.0, 0.0, 1.0}, cplx(1, 1), polar(0.02, 3, 0, kTwoPi), {0.0}, nullptr,
                 [](cplx z) {
                     const cplx a = expint_ei(z), b = expint_ei(-z) - (z.imag() < 0 ? cplx(0, kTwoPi) : 0.0);
                     return std::array<cplx, 3>{0.5 * (a - b), 0.5 * I * (a + b), std::log(z)};
                 }});
    f.push_back({2, "legendre", {{"alpha", 1.0}}, {1.0, 0.0, -2.0}, cplx(0.5, 1), polar(0.02, 8, 0, 3 * kTwoPi),
                 {-1.0, 1.0}, nullptr, [](cplx z) {
                     return std::array<cplx, 3>{0.5 * z, 0.5 * I * (std::log(1.0 + z) - std::log(1.0 - z) - z),
                                                -0.5 * std::log(1.0 - z * z)};
                 }});
    f.push_back({3, "bessel", {{"p", 0.0}}, {1.0, 0.0, -0.5}, 1.0, polar(0.01, 2, 0, kTwoPi), {0.0}, nullptr, [](cplx z) {
                     const cplx l = std::log(z), q = std::pow(z, 4) / 4.0;
                     return std::array<cplx, 3>{0.5 * (l - q), 0.5 * I * (l + q), 0.5 * z * z};
                 }});
    f.push_back({4, "chebyshev1", {{"n", 1.0}}, {1.0, 0.0, -1.0}, 1.0, polar(0.02, 10, 0, kTwoPi), {-1.0, 1.0}, nullptr,
                 [](cplx z) {
                     const cplx a = std::asin(z);
                     return std::array<cplx, 3>{0.5 * (a - a * a * a / 3.0), 0.5 * I * (a + a * a * a / 3.0), 0.5 * a * a};
                 }});
    f.push_back({7, "gegenbauer", {{"alpha", 0.5}, {"n", 1.0}}, {1.0, 0.0, 1.0}, 0.0, polar(0.01, 10, 0, kTwoPi),
                 {-1.0, 1.0}, nullptr, [](cplx z) {
                     return std::array<cplx, 3>{-std::log((1.0 - z) * (1.0 + z)),
                                                I * (std::log(1.0 + z) - std::log(1.0 - z) - z), z};
                 }});
    f.push_back({8, "jacobi", {{"alpha", 1.0}, {"beta", 2.0}, {"n", 1.0}}, {1.0, 0.0, -1.0}, 0.0,
                 {DomainSpec::Kind::Cartesian, -0.99, 0.0, 0.0, 0.99, 60, 60}, {-1.0, 1.0},
                 [](cplx z) { return std::abs(z) < 1.0 && std::abs(z + 1.0) < 2.0; },
                 [](cplx z) {
                     // Upper side of the cut of log(z - 1); the sample points have Im z > 0.
                     const cplx lm = std::log(z - 1.0);
                     const cplx a = (-6.0 * z * (z + 1.0) + 4.0) / ((z - 1.0) * (z + 1.0) * (z + 1.0)) +
                                    3.0 * (std::log(z + 1.0) - lm);
                     const cplx b = 25.0 / 9.0 *
                                    (9.0 / 4.0 * std::pow(z, 4) + 5.0 * std::pow(z, 3) - 17.0 / 2.0 * z * z - 55.0 * z +
                                     32.0 / (1.0 - z) - 48.0 * lm + 225.0 / 4.0);
                     return std::array<cplx, 3>{(a - b) / 32.0, I * (a + b) / 32.0,
                                                -5.0 / 12.0 * (2.0 / (z - 1.0) + 3.0 * lm)};
                 }});
    return f;
}

const Figure& figure(int n) {
    static const std::vector<Figure> all = figures();
    for (const auto& f : all)
        if (f.number == n) return f;
    std::abort();
}

Point3 reference_F(const Figure& f, cplx z) {
    const auto g = f.g(z), g0 = f.g(f.xi0);
    return {(g[0] - g0[0]).real(), (g[1] - g0[1]).real(), (g[2] - g0[2]).real()};
}

WeierstrassData figure_data(const Figure& f) {
    return build_weierstrass(get_equation(f.eq, f.params), f.k, DataSource::Numeric);
}

// Uniform points of the figure's grid box, away from singular points.
std::vector<cplx> random_points(const Figure& f, int count, std::uint64_t seed, double clearance = 0.05) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> a(f.grid.a0, f.grid.a1), b(f.grid.b0, f.grid.b1);
    std::vector<cplx> out;
    while (int(out.size()) < count) {
        const double s = a(rng), t = b(rng);
        const cplx z = f.grid.kind == DomainSpec::Kind::Polar ? std::polar(s, t) : cplx(s, t);
        if (dist_to_set(z, f.singular) < clearance) continue;
        if (f.region && !f.region(z)) continue;
        if (std::abs(z.imag()) < 1e-9) continue; // keep off the real-axis cuts
        out.push_back(z);
    }
    return out;
}

// --- Criteria -------------------------------------------------------------

void golden_laguerre() {
    const Figure& f = figure(1);
    const auto t0 = std::chrono::steady_clock::now();
    const WeierstrassData d = figure_data(f);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> r(0.1, 3.0), th(-kPi, kPi);
    double err = 0.0, pi_offset = 0.0;
    int lower = 0;
    for (int k = 0; k < 50; ++k) {
        const cplx z = std::polar(r(rng), th(rng));
        const Point3 num = immerse_ew(d, f.xi0, z);
        err = std::max(err, max_diff(num, reference_F(f, z)));
        if (z.imag() < 0) {
            // Principal Ei(-z), without aligning its cut to the surface's.
            const cplx a = expint_ei(z) - expint_ei(f.xi0), b = expint_ei(-z) - expint_ei(-f.xi0);
            const double f2 = (0.5 * I * (a + b)).real();
            pi_offset = std::max(pi_offset, std::abs(std::abs(num[1] - f2) - kPi));
            ++lower;
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, err <= kTolGolden && secs < kGoldenSeconds,
           "Laguerre surface vs Ei/log closed form at 50 points, max error " + sci(err) + " (tol " + sci(kTolGolden) +
               "), " + std::to_string(secs).substr(0, 5) + " s");
    detail(std::to_string(lower) + " points in the lower half plane use Ei(-z) on the sheet continued across the positive axis;");
    detail("against principal Ei(-z) there F2 differs by pi to within " + sci(pi_offset));
}

void quaternionic_laguerre() {
    const Figure& f = figure(1);
    const WeierstrassData d = figure_data(f);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> r(0.1, 3.0), th(-kPi, kPi);
    double entry = 0.0, pauli = 0.0;
    for (int k = 0; k < 50; ++k) {
        const cplx z = std::polar(r(rng), th(rng));
        const ContourPath path = plan_path(f.xi0, z, d.obstacles());
        const Matrix2C ft = to_quaternionic(d, path);
        // Closed-form quaternionic immersion -i sum F_k sigma_k written entrywise.
        const Point3 c = reference_F(f, z);
        const Matrix2C ref{-I * c[2], -I * (c[0] - I * c[1]), -I * (c[0] + I * c[1]), I * c[2]};
        entry = std::max({entry, std::abs(ft.a11 - ref.a11), std::abs(ft.a12 - ref.a12), std::abs(ft.a21 - ref.a21),
                          std::abs(ft.a22 - ref.a22)});
        const Point3 fe = immerse_ew(d, path);
        const Matrix2C sum = ft + I * (fe[0] * kSigma1 + fe[1] * kSigma2 + fe[2] * kSigma3);
        pauli = std::max(pauli, sum.norm());
    }
    report(2, entry <= kTolQuaternionic && pauli <= kTolQuaternionic,
           "quaternionic Laguerre immersion, entrywise error " + sci(entry) + ", |F~ + i sum F_k s_k| " + sci(pauli) +
               " (tol " + sci(kTolQuaternionic) + ")");
}

struct TableCase {
    std::string eq;
    ParamMap params;
    std::function<cplx(cplx, const Constants&)> eta_sq, chi;
};

void tables() {
    const Constants k{cplx(1.3, -0.4), cplx(0.7, 0.2), cplx(-0.8, 0.5)};
    const double alpha = 1.5, p = 0.7, n = 2.0, lag = 2.5;
    const std::vector<TableCase> cases = {
        {"legendre", {{"alpha", alpha}},
         [](cplx z, const Constants& c) { return c.c1 * c.c1 / (1.0 - z * z); },
         [=](cplx z, const Constants& c) { return -(alpha * (alpha + 1) * z + c.c2) / (c.lambda * c.c1 * c.c1); }},
        {"bessel", {{"p", p}}, [](cplx z, const Constants& c) { return c.c1 / z; },
         [=](cplx z, const Constants& c) { return (p * p * std::log(z) - z * z / 2.0 + c.c2) / (c.lambda * c.c1); }},
        {"chebyshev1", {{"n", n}}, [](cplx z, const Constants& c) { return c.c1 / std::sqrt(1.0 - z * z); },
         [=](cplx z, const Constants& c) { return -(n * n * std::asin(z) + c.c2) / (c.lambda * c.c1); }},
        {"laguerre", {{"alpha", lag}}, [](cplx z, const Constants& c) { return std::exp(z) / (c.c1 * z); },
         [=](cplx z, const Constants& c) { return (lag * c.c1 * std::exp(-z) + c.c2) / c.lambda; }},
    };
    bool pass = true;
    std::vector<std::string> lines;
    for (const auto& tc : cases) {
        const ODEPtr ode = get_equation(tc.eq, tc.params);
        const WeierstrassData d = build_weierstrass(ode, k, DataSource::Numeric);
        double err = 0.0;
        for (cplx z : verification_points(*ode, 20, 31)) {
            const DataValue v = d.value(z);
            const cplx e = tc.eta_sq(z, k), c = tc.chi(z, k);
            err = std::max({err, std::abs(v.eta_sq - e) / std::max(1.0, std::abs(e)),
                            std::abs(v.chi - c) / std::max(1.0, std::abs(c))});
        }
        pass = pass && err <= kTolTable;
        lines.push_back(tc.eq + ": " + sci(err));
    }
    report(3, pass, "tabulated eta^2 and chi at 20 points per equation, generic c1, c2, lambda (tol " + sci(kTolTable) +
                        " relative)");
    for (const auto& l : lines) detail(l);
}

void figure_closed_forms() {
    bool pass = true;
    std::vector<std::string> lines;
    for (int n : {2, 3, 4, 7, 8}) {
        const Figure& f = figure(n);
        const WeierstrassData d = figure_data(f);
        double err = 0.0;
        for (cplx z : random_points(f, 20, 40 + n)) err = std::max(err, max_diff(immerse_ew(d, f.xi0, z), reference_F(f, z)));
        pass = pass && err <= kTolFigure;
        lines.push_back("figure " + std::to_string(n) + " (" + f.eq + "): " + sci(err));
    }
    report(4, pass, "figure closed forms at 20 points each (tol " + sci(kTolFigure) + ")");
    for (const auto& l : lines) detail(l);
    for (const auto& x : excluded_fixtures())
        detail("excluded: " + (x.figure ? "figure " + std::to_string(x.figure) + " " : std::string()) + x.equation +
               ": " + x.reason);
}

void linear_problem() {
    bool pass = true;
    std::vector<std::string> lines;

    {
        const Figure& f = figure(1);
        const WeierstrassData d = figure_data(f);
        const auto psi = [](cplx z) {
            const cplx e = expint_ei(z) + 1.0;
            return Vec2C{(z - 1.0) * e - std::exp(z), -std::exp(-z) * e};
        };
        double res = 0.0, dbar = 0.0;
        for (cplx z : verification_points(*get_equation("laguerre", f.params), 100, 51)) {
            const LPResidual r = lp_residual(d, psi, z);
            res = std::max(res, r.residual), dbar = std::max(dbar, r.dbar);
        }
        pass = pass && res <= kTolLinearProblem && dbar <= kTolLinearDbar;
        lines.push_back("Laguerre explicit wavefunction: residual " + sci(res) + ", dbar " + sci(dbar));
    }

    for (int n : {2, 4}) {
        const Figure& f = figure(n);
        const ODEPtr ode = get_equation(f.eq, f.params);
        const WeierstrassData d = figure_data(f);
        const cplx z0(0.5, 1.0);
        // psi1 = P1 or T1 = z.
        const Wavefunction wf = integrate_wavefunction(d, ode, {z0, 1.0}, plan_path(z0, cplx(-0.5, 1.0), d.obstacles()));
        double res = 0.0, dbar = 0.0, poly = 0.0;
        for (cplx z : verification_points(*ode, 100, 52 + n)) {
            const LPResidual r = lp_residual(d, wf, z);
            res = std::max(res, r.residual), dbar = std::max(dbar, r.dbar);
            poly = std::max(poly, std::abs(wf.at(z).psi1 - z) / std::max(1.0, std::abs(z)));
        }
        pass = pass && res <= kTolLinearProblem && dbar <= kTolLinearDbar;
        lines.push_back(f.eq + " integrated wavefunction (psi1 = z): residual " + sci(res) + ", dbar " + sci(dbar) +
                        ", |psi1 - z| " + sci(poly));
    }
    report(5, pass, "linear problem d Psi = U Psi at 100 points (tol " + sci(kTolLinearProblem) + ", dbar " +
                        sci(kTolLinearDbar) + ")");
    for (const auto& l : lines) detail(l);
}

void geometry() {
    bool pass = true;
    std::vector<std::string> lines;
    for (int n : {1, 2, 3, 4, 7, 8}) {
        const Figure& f = figure(n);
        const GridResult g = sample_grid(figure_data(f), f.xi0, f.grid);
        double conf = 0, metric = 0, h = 0, qd = 0, liou = 0;
        std::size_t used = 0, missing = 0;
        for (const auto& s : g.samples) {
            if (dist_to_set(s.z, f.singular) < kGeometryClearance) continue;
            if (!s.has_geometry) {
                ++missing;
                continue;
            }
            const GeometryReport& r = s.geometry;
            const double eu = std::exp(r.u);
            conf = std::max(conf, r.conformality / eu);
            metric = std::max(metric, r.metric / eu);
            h = std::max(h, std::abs(r.H));
            qd = std::max(qd, r.hopf_holomorphy * std::max(1.0, std::abs(r.Q)));
            liou = std::max(liou, r.liouville);
            ++used;
        }
        const bool ok = missing == 0 && g.failed == 0 && conf <= kTolConformal && metric <= kTolMetric &&
                        h <= kTolMeanCurvature && qd <= kTolHopfDbar && liou <= kTolLiouville;
        pass = pass && ok;
        lines.push_back("figure " + std::to_string(n) + " (" + f.eq + ", " + std::to_string(used) +
                        " nodes): conformality/e^u " + sci(conf) + ", metric/e^u " + sci(metric) + ", |H| " + sci(h) +
                        ", |dbar Q| " + sci(qd) + ", Liouville " + sci(liou) +
                        (missing ? ", " + std::to_string(missing) + " without geometry" : std::string()));
    }
    report(6, pass, "geometry on the figure grids, nodes at least " + sci(kGeometryClearance) +
                        " from singular points (tol " + sci(kTolConformal) + " e^u, " + sci(kTolMetric) + " e^u, " +
                        sci(kTolMeanCurvature) + ", " + sci(kTolHopfDbar) + ", " + sci(kTolLiouville) + ")");
    for (const auto& l : lines) detail(l);
}

void sym_tafel_check() {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lg(-4.0, 4.0), th(-kPi, kPi);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const cplx chi = k == 0 ? cplx(0.0) : std::polar(std::pow(10.0, lg(rng)), th(rng));
        const Matrix2C m = sym_tafel(chi);
        worst = std::max(worst, (m * m + Matrix2C::identity()).norm());
    }
    report(7, worst <= kTolSymTafel, "(F^ST)^2 = -1 for 1000 random chi, max residual " + sci(worst) + " (tol " +
                                         sci(kTolSymTafel) + ")");
}

void path_independence() {
    bool pass = true;
    std::vector<std::string> lines;
    for (const auto& id : equation_ids()) {
        const ODEPtr ode = get_equation(id);
        const WeierstrassData d = build_weierstrass(ode, ode->default_constants, DataSource::Numeric);
        const std::vector<cplx> pts = verification_points(*ode, 60, 81);
        double err = 0.0, scale = 0.0;
        int distinct = 0;
        std::string failure;
        for (int k = 0; k < 20; ++k) {
            const cplx a = pts[3 * k], b = pts[3 * k + 1], w = pts[3 * k + 2];
            try {
                const ContourPath direct = plan_path(a, b, d.obstacles());
                std::vector<cplx> via = plan_path(a, w, d.obstacles()).waypoints();
                const auto second = plan_path(w, b, d.obstacles()).waypoints();
                via.insert(via.end(), second.begin() + 1, second.end());
                const ContourPath detour(via, d.obstacles());
                distinct += via != direct.waypoints();
                const Point3 fa = immerse_ew(d, direct), fb = immerse_ew(d, detour);
                err = std::max(err, max_diff(fa, fb));
                scale = std::max({scale, std::abs(fa[0]), std::abs(fa[1]), std::abs(fa[2])});
            } catch (const Error& e) {
                failure = e.what();
                break;
            }
        }
        const bool ok = failure.empty() && err <= kTolPaths && distinct == 20;
        pass = pass && ok;
        lines.push_back(id + ": " + (failure.empty() ? sci(err) + " (|F| up to " + sci(scale) + ")" : "error: " + failure));
    }
    report(8, pass, "two homotopic paths for 20 point pairs per equation agree (tol " + sci(kTolPaths) + ")");
    for (const auto& l : lines) detail(l);
}

int run(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void jacobi_region() {
    const Figure& f = figure(8);
    const WeierstrassData d = figure_data(f);
    const GridResult g = sample_grid(d, f.xi0, f.grid);
    std::size_t bad = 0;
    for (const auto& s : g.samples) bad += !(std::abs(s.z) < 1.0 && std::abs(s.z + 1.0) < 2.0);
    bool rejected = false;
    try {
        sample_point(d, f.xi0, cplx(0.9, 0.9));
    } catch (const Error& e) {
        rejected = e.code() == ErrorCode::DomainError;
    }
    const int rc = run(std::string("\"") + WSURF_CLI + "\" sample --eq jacobi --xi 0.9+0.9i > /dev/null 2>&1");
    report(9, bad == 0 && g.outside_region > 0 && rejected && rc == 2,
           "Jacobi grid: " + std::to_string(g.samples.size()) + " accepted nodes, " + std::to_string(bad) +
               " outside |xi| < 1, |xi + 1| < 2; " + std::to_string(g.outside_region) +
               " masked; 0.9+0.9i rejected by the library" + (rejected ? "" : " NOT") + " and by the CLI with exit " +
               std::to_string(rc));
}

struct CsvStats {
    std::size_t rows = 0, nonfinite = 0, empty = 0;
};

CsvStats scan_csv(const fs::path& p) {
    CsvStats st;
    std::ifstream in(p);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        ++st.rows;
        std::stringstream ss(line);
        std::string cell;
        int cells = 0;
        while (std::getline(ss, cell, ',')) {
            ++cells;
            if (cell.empty()) {
                ++st.empty;
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (*end != '\0' || !std::isfinite(v)) ++st.nonfinite;
        }
        if (line.back() == ',') ++st.empty, ++cells;
        if (cells != 8) ++st.nonfinite;
    }
    return st;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t expected_vertices(const Figure& f) {
    std::size_t n = 0;
    for (int i = 0; i < f.grid.n1; ++i)
        for (int j = 0; j < f.grid.n2; ++j) {
            const double s = f.grid.a0 + (f.grid.a1 - f.grid.a0) * i / (f.grid.n1 - 1);
            const double t = f.grid.b0 + (f.grid.b1 - f.grid.b0) * j / (f.grid.n2 - 1);
            const cplx z = std::polar(s, t);
            n += dist_to_set(z, f.singular) > 0.02 * (1.0 + 1e-9);
        }
    return n;
}

std::string grid_arg(const GridSpec& g) {
    char b[160];
    std::snprintf(b, sizeof b, "polar:%.17g,%.17g,%.17g,%.17g,%d,%d", g.a0, g.a1, g.b0, g.b1, g.n1, g.n2);
    return b;
}

void cli_figures() {
    const fs::path dir = fs::temp_directory_path() / ("wsurf_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    bool pass = true;
    std::vector<std::string> lines;
    for (int n : {1, 2, 3, 4}) {
        const Figure& f = figure(n);
        std::string cmd = std::string("\"") + WSURF_CLI + "\" surface --eq " + f.eq;
        for (const auto& [k, v] : f.params) cmd += " --param " + k + "=" + format_complex(v);
        cmd += " --lambda=" + format_complex(f.k.lambda) + " --c1=" + format_complex(f.k.c1) +
               " --c2=" + format_complex(f.k.c2) + " --xi0=" + format_complex(f.xi0) + " --grid " + grid_arg(f.grid);
        const fs::path a = dir / ("fig" + std::to_string(n) + "_a.csv"), b = dir / ("fig" + std::to_string(n) + "_b.csv");
        const fs::path obj = dir / ("fig" + std::to_string(n) + ".obj");
        const int rc = run(cmd + " --out \"" + a.string() + "\" >/dev/null 2>&1") |
                       run(cmd + " --threads 1 --out \"" + b.string() + "\" >/dev/null 2>&1") |
                       run(cmd + " --no-geometry --out \"" + obj.string() + "\" >/dev/null 2>&1");
        const CsvStats st = rc == 0 ? scan_csv(a) : CsvStats{};
        const std::size_t want = expected_vertices(f);
        const bool same = rc == 0 && slurp(a) == slurp(b);
        const bool ok = rc == 0 && st.rows == want && st.nonfinite == 0 && st.empty == 0 && same && fs::file_size(obj) > 0;
        pass = pass && ok;
        lines.push_back("figure " + std::to_string(n) + " (" + f.eq + "): exit " + std::to_string(rc) + ", " +
                        std::to_string(st.rows) + " vertices (expected " + std::to_string(want) + "), " +
                        std::to_string(st.nonfinite) + " non-finite, " + std::to_string(st.empty) + " empty cells, " +
                        (same ? "identical" : "DIFFERENT") + " CSV across thread counts");
    }
    fs::remove_all(dir);
    report(10, pass, "CLI meshes for figures 1-4");
    for (const auto& l : lines) detail(l);
}

template <class F>
void guarded(int n, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        report(n, false, std::string("aborted: ") + e.what());
    }
}

} // namespace

int main() {
    guarded(1, golden_laguerre);
    guarded(2, quaternionic_laguerre);
    guarded(3, tables);
    guarded(4, figure_closed_forms);
    guarded(5, linear_problem);
    guarded(6, geometry);
    guarded(7, sym_tafel_check);
    guarded(8, path_independence);
    guarded(9, jacobi_region);
    guarded(10, cli_figures);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures ? 1 : 0;
}

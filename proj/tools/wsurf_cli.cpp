// Command-line front end. Talks to the library only through wsurf.h.
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wsurf/wsurf.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError {
    std::string message;
};

struct RuntimeError {
    std::string message;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(wsurf_complex z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.re, z.im);
    return buf;
}

// Argument-shaped failures map to the usage exit code, the rest to 1.
bool is_usage_status(wsurf_status s) {
    return s == WSURF_ERR_UNKNOWN_EQUATION || s == WSURF_ERR_PARSE || s == WSURF_ERR_INVALID_ARGUMENT ||
           s == WSURF_ERR_DOMAIN;
}

void check(wsurf_status s) {
    if (s == WSURF_OK) return;
    std::string msg = std::string(wsurf_status_string(s)) + ": " + wsurf_last_error();
    if (is_usage_status(s)) throw UsageError{msg};
    throw RuntimeError{msg};
}

wsurf_complex complex_arg(const std::string& text, const char* what) {
    wsurf_complex z{};
    if (wsurf_parse_complex(text.c_str(), &z) != WSURF_OK)
        throw UsageError{std::string("bad complex literal for ") + what + ": '" + text + "'"};
    return z;
}

template <class T, void (*Destroy)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Destroy(p); }
};

using Equation = Handle<wsurf_equation, wsurf_equation_destroy>;
using Data = Handle<wsurf_data, wsurf_data_destroy>;
using Surface = Handle<wsurf_surface, wsurf_surface_destroy>;
using Report = Handle<wsurf_report, wsurf_report_destroy>;

// Options shared by surface, verify and sample.
struct Common {
    std::string eq;
    std::string ode_file;
    std::vector<std::string> params;
    std::string lambda, c1, c2, xi0;
    std::string source = "numeric";
    double tol = 0.0;

    void add_to(CLI::App* sub) {
        auto* e = sub->add_option("--eq", eq, "catalog equation id (see `list`)");
        auto* f = sub->add_option("--ode-file", ode_file, "user ODE in key = value format")->check(CLI::ExistingFile);
        e->excludes(f);
        sub->add_option("--param", params, "equation parameter k=v (repeatable)")->take_all();
        sub->add_option("--lambda", lambda, "spectral parameter (complex)");
        sub->add_option("--c1", c1, "integration constant c1 (complex)");
        sub->add_option("--c2", c2, "integration constant c2 (complex)");
        sub->add_option("--xi0", xi0, "base point of the immersion (complex)");
        sub->add_option("--source", source, "numeric or closed")->check(CLI::IsMember({"numeric", "closed"}));
    }

    void open(Equation& eqn, wsurf_constants& k, wsurf_complex& base) const {
        if (eq.empty() && ode_file.empty()) throw UsageError{"one of --eq or --ode-file is required"};
        check(eq.empty() ? wsurf_equation_load(ode_file.c_str(), &eqn.p) : wsurf_equation_create(eq.c_str(), &eqn.p));
        for (const auto& kv : params) {
            const auto eqpos = kv.find('=');
            if (eqpos == std::string::npos || eqpos == 0) throw UsageError{"--param expects k=v, got '" + kv + "'"};
            const std::string name = kv.substr(0, eqpos);
            check(wsurf_equation_set_param(eqn.p, name.c_str(), complex_arg(kv.substr(eqpos + 1), name.c_str())));
        }
        check(wsurf_equation_defaults(eqn.p, &k, &base, nullptr));
        if (!lambda.empty()) k.lambda = complex_arg(lambda, "--lambda");
        if (!c1.empty()) k.c1 = complex_arg(c1, "--c1");
        if (!c2.empty()) k.c2 = complex_arg(c2, "--c2");
        if (!xi0.empty()) base = complex_arg(xi0, "--xi0");
    }

    void build(const Equation& eqn, const wsurf_constants& k, Data& data) const {
        const wsurf_source s = source == "closed" ? WSURF_SOURCE_CLOSED_FORM : WSURF_SOURCE_NUMERIC;
        check(wsurf_data_create(eqn.p, &k, s, tol, &data.p));
    }
};

double tolerance_from_env() {
    const char* text = std::getenv("WSURF_TOL");
    if (!text || !*text) return 0.0;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text, &end);
    if (errno != 0 || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
        throw UsageError{std::string("WSURF_TOL must be a positive decimal, got '") + text + "'"};
    return v;
}

int run_list() {
    for (int n = 0; n < wsurf_equation_count(); ++n) {
        Equation e;
        check(wsurf_equation_create(wsurf_equation_id_at(n), &e.p));
        std::printf("%s  %s\n", wsurf_equation_id(e.p), wsurf_equation_title(e.p));
        for (int k = 0; k < wsurf_equation_param_count(e.p); ++k) {
            const char* name = nullptr;
            const char* desc = nullptr;
            wsurf_complex v{};
            check(wsurf_equation_param(e.p, k, &name, &v, &desc));
            std::printf("    --param %s=%s  %s\n", name, fmt(v).c_str(), desc);
        }
        wsurf_constants c{};
        wsurf_complex xi0{};
        wsurf_grid g{};
        check(wsurf_equation_defaults(e.p, &c, &xi0, &g));
        std::printf("    defaults: --lambda %s --c1 %s --c2 %s --xi0 %s --grid %s:%s,%s,%s,%s,%d,%d\n", fmt(c.lambda).c_str(),
                    fmt(c.c1).c_str(), fmt(c.c2).c_str(), fmt(xi0).c_str(),
                    g.kind == WSURF_GRID_POLAR ? "polar" : "cartesian", fmt(g.a0).c_str(), fmt(g.a1).c_str(),
                    fmt(g.b0).c_str(), fmt(g.b1).c_str(), g.n1, g.n2);
        if (*wsurf_equation_region(e.p)) std::printf("    region: %s\n", wsurf_equation_region(e.p));
        if (*wsurf_equation_note(e.p)) std::printf("    note: %s\n", wsurf_equation_note(e.p));
    }
    return kExitOk;
}

int run_surface(const Common& c, const std::string& grid_text, const std::string& out, std::string format,
                unsigned threads, bool geometry) {
    Equation eqn;
    wsurf_constants k{};
    wsurf_complex xi0{};
    c.open(eqn, k, xi0);
    wsurf_grid grid{};
    if (grid_text.empty()) check(wsurf_equation_defaults(eqn.p, nullptr, nullptr, &grid));
    else check(wsurf_grid_parse(grid_text.c_str(), &grid));
    if (format.empty()) {
        const auto dot = out.rfind('.');
        format = dot == std::string::npos ? "obj" : out.substr(dot + 1);
        if (format != "obj" && format != "ply" && format != "csv") format = "obj";
    }
    if (format != "obj" && format != "ply" && format != "csv") throw UsageError{"unknown format '" + format + "'"};

    Data data;
    c.build(eqn, k, data);
    Surface s;
    check(wsurf_surface_create(data.p, xi0, &grid, geometry, threads, &s.p));
    wsurf_surface_counts n{};
    check(wsurf_surface_counts_get(s.p, &n));
    if (out == "-") {
        const char* text = nullptr;
        std::size_t len = 0;
        check(wsurf_surface_render(s.p, format.c_str(), &text, &len));
        std::fwrite(text, 1, len, stdout);
    } else {
        std::size_t bytes = 0;
        check(wsurf_surface_export(s.p, format.c_str(), out.c_str(), &bytes));
        std::printf("wrote %s (%zu bytes)\n", out.c_str(), bytes);
    }
    std::fprintf(stderr, "nodes=%zu vertices=%zu faces=%zu excluded=%zu outside_region=%zu failed=%zu\n", n.nodes,
                 n.vertices, n.faces, n.excluded, n.outside_region, n.failed);
    for (int node = 0; n.failed && node < grid.n1 * grid.n2; ++node) {
        const int i = node / grid.n2, j = node % grid.n2;
        if (wsurf_surface_node_status(s.p, i, j) != WSURF_NODE_FAILED) continue;
        std::fprintf(stderr, "first failed node (%d,%d): %s\n", i, j, wsurf_surface_node_error(s.p, i, j));
        break;
    }
    return kExitOk;
}

int run_verify(const Common& c, int samples, std::uint64_t seed) {
    Equation eqn;
    wsurf_constants k{};
    wsurf_complex xi0{};
    c.open(eqn, k, xi0);
    Data data;
    c.build(eqn, k, data);
    Report r;
    check(wsurf_verify_run(data.p, xi0, samples, seed, &r.p));
    for (std::size_t i = 0; i < wsurf_report_count(r.p); ++i) {
        wsurf_residual e{};
        check(wsurf_report_entry(r.p, i, &e));
        std::printf("%-26s %-4s max=%.3e  threshold=%.1e  at=%s  n=%zu\n", e.name, e.pass ? "ok" : "FAIL", e.value,
                    e.threshold, fmt(e.worst_point).c_str(), e.samples);
    }
    const bool ok = wsurf_report_passed(r.p);
    std::printf("%s\n", ok ? "all residuals within tolerance" : "residuals above tolerance");
    return ok ? kExitOk : kExitFailure;
}

int run_sample(const Common& c, const std::string& xi_text, bool geometry) {
    Equation eqn;
    wsurf_constants k{};
    wsurf_complex xi0{};
    c.open(eqn, k, xi0);
    const wsurf_complex xi = complex_arg(xi_text, "--xi");
    Data data;
    c.build(eqn, k, data);
    wsurf_sample s{};
    check(wsurf_sample_point(data.p, xi0, xi, geometry, &s));
    std::string line = "xi=" + fmt(s.z) + " F1=" + fmt(s.F[0]) + " F2=" + fmt(s.F[1]) + " F3=" + fmt(s.F[2]);
    static const char* idx[4] = {"11", "12", "21", "22"};
    for (int m = 0; m < 4; ++m) line += std::string(" Ftilde") + idx[m] + "=" + fmt(s.Ftilde[m]);
    for (int m = 0; m < 4; ++m) line += std::string(" Fst") + idx[m] + "=" + fmt(s.Fst[m]);
    line += " chi=" + fmt(s.chi) + " u=" + fmt(s.u) + " Q=" + fmt(s.Q);
    if (s.has_geometry) {
        line += " H=" + fmt(s.H) + " conformality=" + fmt(s.conformality) + " metric=" + fmt(s.metric) +
                " hopf=" + fmt(s.hopf) + " hopf_holomorphy=" + fmt(s.hopf_holomorphy) + " liouville=" + fmt(s.liouville);
    }
    std::printf("%s\n", line.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal surfaces from linear ODEs via the Enneper-Weierstrass representation"};
    app.set_version_flag("--version", wsurf_version());
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "catalog equations and their parameters");

    Common sc, vc, pc;
    std::string grid, out, format;
    unsigned threads = 0;
    bool no_geometry = false;
    auto* surface = app.add_subcommand("surface", "sample a grid and export a mesh");
    sc.add_to(surface);
    surface->add_option("--grid", grid, "polar:r0,r1,t0,t1[,n1,n2] or cartesian:x0,x1,y0,y1[,n1,n2]");
    surface->add_option("--out", out, "output file, or - for stdout")->required();
    surface->add_option("--format", format, "obj, ply or csv (default: from the file extension)");
    surface->add_option("--threads", threads, "worker threads (0: all cores)");
    surface->add_flag("--no-geometry", no_geometry, "skip the per-node curvature report");

    int samples = 20;
    std::uint64_t seed = 20240601;
    auto* verify = app.add_subcommand("verify", "run the residual suite; exit 1 if any residual exceeds its threshold");
    vc.add_to(verify);
    verify->add_option("--samples", samples, "sample points")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "sample point seed");

    std::string xi;
    bool sample_no_geometry = false;
    auto* sample = app.add_subcommand("sample", "print the immersion at one point as key=value pairs");
    pc.add_to(sample);
    sample->add_option("--xi", xi, "parameter point (complex)")->required();
    sample->add_flag("--no-geometry", sample_no_geometry, "skip the curvature report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const double tol = tolerance_from_env();
        sc.tol = vc.tol = pc.tol = tol;
        if (*list) return run_list();
        if (*surface) return run_surface(sc, grid, out, format, threads, !no_geometry);
        if (*verify) return run_verify(vc, samples, seed);
        if (*sample) return run_sample(pc, xi, !sample_no_geometry);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return kExitUsage;
    } catch (const RuntimeError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return kExitFailure;
    }
    return kExitUsage;
}

#include "wsurf/wsurf.h"

#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "wsurf/expression.hpp"
#include "wsurf/mesh_export.hpp"
#include "wsurf/verify.hpp"

using namespace wsurf;

struct wsurf_equation {
    bool user = false;
    std::string source; // catalog id, or the user ODE text
    ParamMap overrides;
    ODEPtr ode;
};

struct wsurf_data {
    WeierstrassData data;
};

struct wsurf_surface {
    GridResult grid;
    SurfaceMesh mesh;
    std::vector<std::size_t> sample_of_vertex;
    std::string rendered;
};

struct wsurf_report {
    std::vector<ResidualEntry> entries;
};

namespace {

thread_local std::string last_error;

wsurf_status fail(wsurf_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
}

template <class F>
wsurf_status guarded(F&& body) {
    try {
        body();
        return WSURF_OK;
    } catch (const Error& e) {
        return fail(static_cast<wsurf_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return fail(WSURF_ERR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(WSURF_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(WSURF_ERR_INTERNAL, "unknown exception");
    }
}

#define WSURF_REQUIRE(cond)                                                                              \
    do {                                                                                                 \
        if (!(cond)) return fail(WSURF_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);               \
    } while (0)

cplx to_cplx(wsurf_complex z) { return {z.re, z.im}; }
wsurf_complex to_c(cplx z) { return {z.real(), z.imag()}; }

Constants to_constants(const wsurf_constants& k) { return {to_cplx(k.c1), to_cplx(k.c2), to_cplx(k.lambda)}; }

void fill_matrix(wsurf_complex out[4], const Matrix2C& m) {
    out[0] = to_c(m.a11), out[1] = to_c(m.a12), out[2] = to_c(m.a21), out[3] = to_c(m.a22);
}

void fill_sample(wsurf_sample& o, const ImmersionSample& s) {
    o = wsurf_sample{};
    o.i = s.i, o.j = s.j;
    o.z = to_c(s.z);
    for (int k = 0; k < 3; ++k) o.F[k] = s.F[k];
    fill_matrix(o.Ftilde, s.Ftilde);
    fill_matrix(o.Fst, s.Fst);
    o.chi = to_c(s.chi);
    o.u = s.u;
    o.Q = to_c(s.Q);
    o.has_geometry = s.has_geometry;
    if (s.has_geometry) {
        const GeometryReport& g = s.geometry;
        o.H = g.H;
        o.conformality = g.conformality;
        o.metric = g.metric;
        o.hopf = g.hopf;
        o.hopf_holomorphy = g.hopf_holomorphy;
        o.liouville = g.liouville;
        o.u_data = g.u_data;
        o.Q_data = to_c(g.Q_data);
    }
}

GridSpec to_spec(const wsurf_grid& g) {
    return {g.kind == WSURF_GRID_CARTESIAN ? DomainSpec::Kind::Cartesian : DomainSpec::Kind::Polar,
            g.a0, g.a1, g.b0, g.b1, g.n1, g.n2};
}

wsurf_grid from_spec(const GridSpec& g) {
    return {g.kind == DomainSpec::Kind::Cartesian ? WSURF_GRID_CARTESIAN : WSURF_GRID_POLAR,
            g.a0, g.a1, g.b0, g.b1, g.n1, g.n2};
}

void rebuild(wsurf_equation& e) {
    e.ode = e.user ? parse_user_ode(e.source, e.overrides) : get_equation(e.source, e.overrides);
}

wsurf_status make_equation(bool user, std::string source, wsurf_equation** out) {
    auto e = std::make_unique<wsurf_equation>();
    e->user = user;
    e->source = std::move(source);
    rebuild(*e);
    *out = e.release();
    return WSURF_OK;
}

} // namespace

extern "C" {

const char* wsurf_version(void) { return "0.1.0"; }

const char* wsurf_status_string(wsurf_status status) {
    switch (status) {
    case WSURF_OK: return "ok";
    case WSURF_ERR_OUT_OF_MEMORY: return "out of memory";
    case WSURF_ERR_INTERNAL: return "internal error";
    default:
        if (status >= WSURF_ERR_BRANCH_CUT && status <= WSURF_ERR_INVALID_ARGUMENT)
            return to_string(static_cast<ErrorCode>(static_cast<int>(status)));
        return "unknown status";
    }
}

const char* wsurf_last_error(void) { return last_error.c_str(); }

wsurf_status wsurf_parse_complex(const char* text, wsurf_complex* out) {
    WSURF_REQUIRE(text && out);
    return guarded([&] { *out = to_c(parse_complex(text)); });
}

int wsurf_equation_count(void) { return int(equation_ids().size()); }

const char* wsurf_equation_id_at(int index) {
    const auto& ids = equation_ids();
    if (index < 0 || index >= int(ids.size())) return nullptr;
    return ids[index].c_str();
}

wsurf_status wsurf_equation_create(const char* id, wsurf_equation** out) {
    WSURF_REQUIRE(id && out);
    return guarded([&] { make_equation(false, id, out); });
}

wsurf_status wsurf_equation_load(const char* path, wsurf_equation** out) {
    WSURF_REQUIRE(path && out);
    return guarded([&] {
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::IoFailure, std::string("cannot read ") + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        make_equation(true, ss.str(), out);
    });
}

wsurf_status wsurf_equation_from_text(const char* text, wsurf_equation** out) {
    WSURF_REQUIRE(text && out);
    return guarded([&] { make_equation(true, text, out); });
}

void wsurf_equation_destroy(wsurf_equation* eq) { delete eq; }

wsurf_status wsurf_equation_set_param(wsurf_equation* eq, const char* name, wsurf_complex value) {
    WSURF_REQUIRE(eq && name);
    return guarded([&] {
        bool known = false;
        for (const auto& p : eq->ode->schema) known = known || p.name == name;
        if (!known) throw Error(ErrorCode::InvalidArgument, std::string("unknown parameter '") + name + "' for " + eq->ode->id);
        ParamMap next = eq->overrides;
        next[name] = to_cplx(value);
        wsurf_equation trial = *eq;
        trial.overrides = next;
        rebuild(trial);
        *eq = std::move(trial);
    });
}

const char* wsurf_equation_id(const wsurf_equation* eq) { return eq ? eq->ode->id.c_str() : nullptr; }
const char* wsurf_equation_title(const wsurf_equation* eq) { return eq ? eq->ode->title.c_str() : nullptr; }
const char* wsurf_equation_note(const wsurf_equation* eq) { return eq ? eq->ode->note.c_str() : nullptr; }
const char* wsurf_equation_region(const wsurf_equation* eq) { return eq ? eq->ode->valid_region_text.c_str() : nullptr; }

int wsurf_equation_param_count(const wsurf_equation* eq) { return eq ? int(eq->ode->schema.size()) : 0; }

wsurf_status wsurf_equation_param(const wsurf_equation* eq, int index, const char** name, wsurf_complex* value,
                                  const char** description) {
    WSURF_REQUIRE(eq && index >= 0 && index < int(eq->ode->schema.size()));
    const ParamSpec& p = eq->ode->schema[index];
    if (name) *name = p.name.c_str();
    if (value) *value = to_c(eq->ode->param(p.name));
    if (description) *description = p.description.c_str();
    return WSURF_OK;
}

wsurf_status wsurf_equation_defaults(const wsurf_equation* eq, wsurf_constants* constants, wsurf_complex* xi0,
                                     wsurf_grid* grid) {
    WSURF_REQUIRE(eq);
    const LinearODE& o = *eq->ode;
    if (constants) *constants = {to_c(o.default_constants.c1), to_c(o.default_constants.c2), to_c(o.default_constants.lambda)};
    if (xi0) *xi0 = to_c(o.default_xi0);
    if (grid) *grid = from_spec(grid_from_domain(o.default_domain));
    return WSURF_OK;
}

int wsurf_equation_in_region(const wsurf_equation* eq, wsurf_complex z) {
    return eq && eq->ode->in_valid_region(to_cplx(z)) ? 1 : 0;
}

int wsurf_equation_has_closed_form(const wsurf_equation* eq, const wsurf_constants* constants) {
    if (!eq || !constants || !eq->ode->closed_form) return 0;
    try {
        return eq->ode->closed_form(to_constants(*constants)).has_value() ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

wsurf_status wsurf_data_create(const wsurf_equation* eq, const wsurf_constants* constants, wsurf_source source,
                               double tol, wsurf_data** out) {
    WSURF_REQUIRE(eq && constants && out);
    WSURF_REQUIRE(source == WSURF_SOURCE_NUMERIC || source == WSURF_SOURCE_CLOSED_FORM);
    return guarded([&] {
        const DataSource s = source == WSURF_SOURCE_CLOSED_FORM ? DataSource::ClosedForm : DataSource::Numeric;
        *out = new wsurf_data{build_weierstrass(eq->ode, to_constants(*constants), s, tol)};
    });
}

void wsurf_data_destroy(wsurf_data* data) { delete data; }

wsurf_status wsurf_data_value(const wsurf_data* data, wsurf_complex z, wsurf_complex* eta_sq, wsurf_complex* chi) {
    WSURF_REQUIRE(data);
    return guarded([&] {
        const DataValue v = data->data.value(to_cplx(z));
        if (eta_sq) *eta_sq = to_c(v.eta_sq);
        if (chi) *chi = to_c(v.chi);
    });
}

wsurf_status wsurf_sample_point(const wsurf_data* data, wsurf_complex xi0, wsurf_complex xi, int geometry,
                                wsurf_sample* out) {
    WSURF_REQUIRE(data && out);
    return guarded([&] { fill_sample(*out, sample_point(data->data, to_cplx(xi0), to_cplx(xi), geometry != 0)); });
}

wsurf_status wsurf_grid_parse(const char* text, wsurf_grid* out) {
    WSURF_REQUIRE(text && out);
    return guarded([&] { *out = from_spec(parse_grid(text)); });
}

wsurf_status wsurf_surface_create(const wsurf_data* data, wsurf_complex xi0, const wsurf_grid* grid, int geometry,
                                  unsigned threads, wsurf_surface** out) {
    WSURF_REQUIRE(data && grid && out);
    return guarded([&] {
        auto s = std::make_unique<wsurf_surface>();
        SampleOptions opt;
        opt.geometry = geometry != 0;
        opt.threads = threads;
        s->grid = sample_grid(data->data, to_cplx(xi0), to_spec(*grid), opt);
        s->mesh = build_mesh(s->grid);
        for (std::size_t k = 0; k < s->grid.samples.size(); ++k) {
            const auto& smp = s->grid.samples[k];
            if (s->mesh.vertex_of_node[std::size_t(smp.i) * s->mesh.n2 + smp.j] >= 0) s->sample_of_vertex.push_back(k);
        }
        *out = s.release();
    });
}

void wsurf_surface_destroy(wsurf_surface* surface) { delete surface; }

wsurf_status wsurf_surface_counts_get(const wsurf_surface* surface, wsurf_surface_counts* out) {
    WSURF_REQUIRE(surface && out);
    out->nodes = surface->grid.status.size();
    out->vertices = surface->mesh.vertex_count();
    out->faces = surface->mesh.faces.size();
    out->excluded = surface->grid.excluded;
    out->outside_region = surface->grid.outside_region;
    out->failed = surface->grid.failed;
    return WSURF_OK;
}

wsurf_node_status wsurf_surface_node_status(const wsurf_surface* surface, int i, int j) {
    if (!surface || i < 0 || j < 0 || i >= surface->grid.spec.n1 || j >= surface->grid.spec.n2) return WSURF_NODE_FAILED;
    return static_cast<wsurf_node_status>(static_cast<int>(surface->grid.at(i, j)));
}

const char* wsurf_surface_node_error(const wsurf_surface* surface, int i, int j) {
    if (!surface || i < 0 || j < 0 || i >= surface->grid.spec.n1 || j >= surface->grid.spec.n2) return "";
    return surface->grid.errors[std::size_t(i) * surface->grid.spec.n2 + j].c_str();
}

wsurf_status wsurf_surface_vertex(const wsurf_surface* surface, size_t index, wsurf_sample* out) {
    WSURF_REQUIRE(surface && out && index < surface->sample_of_vertex.size());
    fill_sample(*out, surface->grid.samples[surface->sample_of_vertex[index]]);
    return WSURF_OK;
}

wsurf_status wsurf_surface_face(const wsurf_surface* surface, size_t index, int corners[4]) {
    WSURF_REQUIRE(surface && corners && index < surface->mesh.faces.size());
    for (int k = 0; k < 4; ++k) corners[k] = surface->mesh.faces[index][k];
    return WSURF_OK;
}

wsurf_status wsurf_surface_export(const wsurf_surface* surface, const char* format, const char* path,
                                  size_t* bytes_written) {
    WSURF_REQUIRE(surface && format && path);
    return guarded([&] {
        const std::size_t n = export_mesh(surface->mesh, parse_mesh_format(format), std::string(path));
        if (bytes_written) *bytes_written = n;
    });
}

wsurf_status wsurf_surface_render(wsurf_surface* surface, const char* format, const char** text, size_t* length) {
    WSURF_REQUIRE(surface && format && text);
    return guarded([&] {
        std::ostringstream os;
        export_mesh(surface->mesh, parse_mesh_format(format), os);
        surface->rendered = os.str();
        *text = surface->rendered.c_str();
        if (length) *length = surface->rendered.size();
    });
}

wsurf_status wsurf_verify_run(const wsurf_data* data, wsurf_complex xi0, int samples, uint64_t seed, wsurf_report** out) {
    WSURF_REQUIRE(data && out && samples > 0);
    return guarded([&] {
        VerifyOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        *out = new wsurf_report{run_verify_suite(data->data, to_cplx(xi0), opt)};
    });
}

void wsurf_report_destroy(wsurf_report* report) { delete report; }

size_t wsurf_report_count(const wsurf_report* report) { return report ? report->entries.size() : 0; }

wsurf_status wsurf_report_entry(const wsurf_report* report, size_t index, wsurf_residual* out) {
    WSURF_REQUIRE(report && out && index < report->entries.size());
    const ResidualEntry& e = report->entries[index];
    *out = {e.name.c_str(), e.value, e.threshold, to_c(e.worst_point), e.samples, e.pass() ? 1 : 0};
    return WSURF_OK;
}

int wsurf_report_passed(const wsurf_report* report) {
    if (!report) return 0;
    for (const auto& e : report->entries)
        if (!e.pass()) return 0;
    return 1;
}

} // extern "C"

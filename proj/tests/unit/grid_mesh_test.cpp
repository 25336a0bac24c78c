#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wsurf/fixtures.hpp"
#include "wsurf/mesh_export.hpp"

using namespace wsurf;

namespace {

WeierstrassData plane() {
    return WeierstrassData::from_functions([](cplx) { return cplx(1.0); }, [](cplx) { return cplx(0.0); }, {1.0, 0.0, 1.0},
                                           0.0);
}

std::string render(const SurfaceMesh& m, MeshFormat f) {
    std::ostringstream os;
    export_mesh(m, f, os);
    return os.str();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("grid parsing") {
    const GridSpec g = parse_grid("polar:0.1,3,0,6.283,60,50");
    CHECK(g.kind == DomainSpec::Kind::Polar);
    CHECK(g.a0 == 0.1);
    CHECK(g.b1 == 6.283);
    CHECK(g.n1 == 60);
    CHECK(g.n2 == 50);
    CHECK(parse_grid("cartesian:-1,1,-2,2").n1 == 60);
    CHECK(parse_grid(to_string(g)).b1 == g.b1);
    for (const char* bad : {"polar:1,0,0,1", "polar:0,1,0,1,1,5", "hex:0,1,0,1", "polar:0,1,0", "polar:0,1,0,x",
                            "polar:0,1,0,1,5,2.5", "0,1,0,1"}) {
        CAPTURE(bad);
        try {
            parse_grid(bad);
            FAIL("expected ParseError");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("polar nodes fold negative radii") {
    GridSpec g{DomainSpec::Kind::Polar, -2.0, 2.0, 0.0, 1.0, 3, 2};
    CHECK(std::abs(g.node(0, 0) - cplx(-2.0, 0.0)) < 1e-15);
    CHECK(std::abs(g.node(0, 1) - std::polar(2.0, 1.0 + kPi)) < 1e-15);
}

TEST_CASE("plane quad") {
    const GridSpec g{DomainSpec::Kind::Cartesian, 0.0, 1.0, 0.0, 1.0, 2, 2};
    const GridResult r = sample_grid(plane(), 0.0, g);
    REQUIRE(r.samples.size() == 4);
    for (const auto& s : r.samples) CHECK(s.F[2] == 0.0);
    const SurfaceMesh m = build_mesh(r);
    CHECK(m.faces.size() == 1);
    const auto obj = lines(render(m, MeshFormat::Obj));
    REQUIRE(obj.size() == 5);
    for (int k = 0; k < 4; ++k) CHECK(obj[k].rfind("v ", 0) == 0);
    CHECK(obj[4] == "f 1 3 4 2");
    const auto ply = lines(render(m, MeshFormat::Ply));
    CHECK(ply[0] == "ply");
    CHECK(ply[1] == "format ascii 1.0");
    CHECK(ply[2] == "element vertex 4");
    CHECK(ply.back() == "4 0 2 3 1");
}

TEST_CASE("empty mesh and unwritable destination") {
    GridResult empty;
    empty.spec = {DomainSpec::Kind::Cartesian, 0.0, 1.0, 0.0, 1.0, 2, 2};
    empty.status.assign(4, NodeStatus::Failed);
    const SurfaceMesh m = build_mesh(empty);
    std::ostringstream os;
    try {
        export_mesh(m, MeshFormat::Obj, os);
        FAIL("expected EmptyMesh");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyMesh);
    }
    const SurfaceMesh quad = build_mesh(sample_grid(plane(), 0.0, {DomainSpec::Kind::Cartesian, 0.0, 1.0, 0.0, 1.0, 2, 2}));
    try {
        export_mesh(quad, MeshFormat::Csv, std::string("/nonexistent-dir/x.csv"));
        FAIL("expected IoFailure");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IoFailure);
    }
    CHECK_THROWS_AS(parse_mesh_format("stl"), Error);
}

TEST_CASE("laguerre grid masks the disc at 0") {
    const auto& fx = fixture_for_figure(1);
    const auto d = build_weierstrass(fx.equation_ptr(), fx.constants, DataSource::Numeric);
    const GridSpec g = parse_grid("polar:0.02,3,0,6.283185307179586,50,50");
    SampleOptions opt;
    opt.geometry = false;
    const GridResult r = sample_grid(d, fx.xi0, g, opt);
    std::size_t near = 0;
    for (int i = 0; i < g.n1; ++i)
        for (int j = 0; j < g.n2; ++j) near += std::abs(g.node(i, j)) <= 0.02 * (1.0 + 1e-9);
    CHECK(near == 50);
    CHECK(r.excluded == near);
    CHECK(r.failed == 0);
    CHECK(r.samples.size() == 2500 - near);
    for (std::size_t k = 1; k < r.samples.size(); ++k) {
        const auto& a = r.samples[k - 1];
        const auto& b = r.samples[k];
        CHECK((a.i < b.i || (a.i == b.i && a.j < b.j))); // row-major
    }
    const SurfaceMesh m = build_mesh(r);
    CHECK(m.vertex_count() == r.samples.size());
}

TEST_CASE("thread count does not change the surface") {
    auto leg = get_equation("legendre");
    const auto d = build_weierstrass(leg, leg->default_constants, DataSource::Numeric);
    const GridSpec g = parse_grid("polar:0.1,4,0,9.42,12,17");
    SampleOptions one, many;
    one.threads = 1;
    many.threads = 5;
    const auto a = render(build_mesh(sample_grid(d, leg->default_xi0, g, one)), MeshFormat::Csv);
    const auto b = render(build_mesh(sample_grid(d, leg->default_xi0, g, many)), MeshFormat::Csv);
    CHECK(a == b);
}

TEST_CASE("csv round trip is bit exact") {
    auto bes = get_equation("bessel");
    const auto d = build_weierstrass(bes, bes->default_constants, DataSource::Numeric);
    const SurfaceMesh m = build_mesh(sample_grid(d, bes->default_xi0, parse_grid("polar:0.1,2,0,6.283,15,15")));
    const auto rows = lines(render(m, MeshFormat::Csv));
    REQUIRE(rows.size() == m.vertex_count() + 1);
    CHECK(rows[0] == "re,im,F1,F2,F3,u,absQ,H_residual");
    for (std::size_t k = 0; k < m.vertex_count(); ++k) {
        std::istringstream in(rows[k + 1]);
        std::vector<double> v;
        for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::strtod(cell.c_str(), nullptr));
        REQUIRE(v.size() == 8);
        CHECK(v[0] == m.params[k].real());
        CHECK(v[1] == m.params[k].imag());
        CHECK(v[2] == m.vertices[k][0]);
        CHECK(v[3] == m.vertices[k][1]);
        CHECK(v[4] == m.vertices[k][2]);
        CHECK(v[5] == m.u[k]);
        CHECK(v[6] == m.abs_q[k]);
    }
}

TEST_CASE("jacobi nodes respect the admissible region") {
    const auto& fx = fixture_for_figure(8);
    auto ode = fx.equation_ptr();
    const auto d = build_weierstrass(ode, fx.constants, DataSource::Numeric);
    const GridResult r = sample_grid(d, fx.xi0, parse_grid("polar:0.05,2.5,0,6.283,20,24"));
    CHECK(r.outside_region > 0);
    for (const auto& s : r.samples) {
        CHECK(std::abs(s.z) < 1.0);
        CHECK(std::abs(s.z + 1.0) < 2.0);
    }
    try {
        sample_point(d, fx.xi0, cplx(1.5, 0.5));
        FAIL("expected DomainError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainError);
    }
}

TEST_CASE("sample point") {
    const auto& fx = fixture_for_figure(1);
    const auto d = build_weierstrass(fx.equation_ptr(), fx.constants, DataSource::Numeric);
    const ImmersionSample s = sample_point(d, fx.xi0, cplx(2.0, 1.0));
    CHECK(s.has_geometry);
    const Point3 ref = reference_surface(fx, cplx(2.0, 1.0));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(s.F[k] - ref[k]) < 1e-10);
    CHECK(std::abs(s.chi - std::exp(-cplx(2.0, 1.0))) < 1e-10);
    CHECK_THROWS_AS(sample_point(d, fx.xi0, 0.0), SingularPoint);
}

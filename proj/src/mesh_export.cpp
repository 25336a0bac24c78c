#include "wsurf/mesh_export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace wsurf {

SurfaceMesh build_mesh(const GridResult& grid) {
    SurfaceMesh m;
    m.n1 = grid.spec.n1;
    m.n2 = grid.spec.n2;
    m.vertex_of_node.assign(grid.status.size(), -1);
    for (const auto& s : grid.samples) {
        bool finite = true;
        for (double c : s.F) finite = finite && std::isfinite(c);
        if (!finite) continue;
        m.vertex_of_node[std::size_t(s.i) * m.n2 + s.j] = int(m.vertices.size());
        m.params.push_back(s.z);
        m.vertices.push_back(s.F);
        m.u.push_back(s.u);
        m.abs_q.push_back(std::abs(s.Q));
        m.h_residual.push_back(s.has_geometry ? std::abs(s.geometry.H) : std::nan(""));
    }
    auto v = [&](int i, int j) { return m.vertex_of_node[std::size_t(i) * m.n2 + j]; };
    for (int i = 0; i + 1 < m.n1; ++i)
        for (int j = 0; j + 1 < m.n2; ++j) {
            const std::array<int, 4> q{v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)};
            if (q[0] >= 0 && q[1] >= 0 && q[2] >= 0 && q[3] >= 0) m.faces.push_back(q);
        }
    return m;
}

MeshFormat parse_mesh_format(const std::string& name) {
    if (name == "obj") return MeshFormat::Obj;
    if (name == "ply") return MeshFormat::Ply;
    if (name == "csv") return MeshFormat::Csv;
    throw Error(ErrorCode::ParseError, "unknown mesh format '" + name + "'");
}

namespace {

// 17 significant digits: reads back to the same double.
std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string render(const SurfaceMesh& m, MeshFormat format) {
    std::string s;
    s.reserve(m.vertices.size() * 80);
    switch (format) {
    case MeshFormat::Obj:
        for (const auto& p : m.vertices) s += "v " + num(p[0]) + ' ' + num(p[1]) + ' ' + num(p[2]) + '\n';
        for (const auto& f : m.faces)
            s += "f " + std::to_string(f[0] + 1) + ' ' + std::to_string(f[1] + 1) + ' ' + std::to_string(f[2] + 1) + ' ' +
                 std::to_string(f[3] + 1) + '\n';
        break;
    case MeshFormat::Ply:
        s += "ply\nformat ascii 1.0\n";
        s += "element vertex " + std::to_string(m.vertices.size()) + '\n';
        s += "property double x\nproperty double y\nproperty double z\nproperty double u\nproperty double absQ\n";
        s += "element face " + std::to_string(m.faces.size()) + '\n';
        s += "property list uchar int vertex_indices\nend_header\n";
        for (std::size_t k = 0; k < m.vertices.size(); ++k) {
            const auto& p = m.vertices[k];
            s += num(p[0]) + ' ' + num(p[1]) + ' ' + num(p[2]) + ' ' + num(m.u[k]) + ' ' + num(m.abs_q[k]) + '\n';
        }
        for (const auto& f : m.faces)
            s += "4 " + std::to_string(f[0]) + ' ' + std::to_string(f[1]) + ' ' + std::to_string(f[2]) + ' ' +
                 std::to_string(f[3]) + '\n';
        break;
    case MeshFormat::Csv:
        s += "re,im,F1,F2,F3,u,absQ,H_residual\n";
        for (std::size_t k = 0; k < m.vertices.size(); ++k) {
            const auto& p = m.vertices[k];
            s += num(m.params[k].real()) + ',' + num(m.params[k].imag()) + ',' + num(p[0]) + ',' + num(p[1]) + ',' +
                 num(p[2]) + ',' + num(m.u[k]) + ',' + num(m.abs_q[k]) + ',' +
                 (std::isnan(m.h_residual[k]) ? std::string() : num(m.h_residual[k])) + '\n';
        }
        break;
    }
    return s;
}

} // namespace

std::size_t export_mesh(const SurfaceMesh& mesh, MeshFormat format, std::ostream& out) {
    if (mesh.vertices.empty()) throw Error(ErrorCode::EmptyMesh, "mesh has no vertices");
    const std::string text = render(mesh, format);
    out.write(text.data(), std::streamsize(text.size()));
    if (!out) throw Error(ErrorCode::IoFailure, "write failed");
    return text.size();
}

std::size_t export_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::string& path) {
    if (mesh.vertices.empty()) throw Error(ErrorCode::EmptyMesh, "mesh has no vertices");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
    const std::size_t n = export_mesh(mesh, format, f);
    f.close();
    if (!f) throw Error(ErrorCode::IoFailure, "cannot finish writing '" + path + "'");
    return n;
}

} // namespace wsurf

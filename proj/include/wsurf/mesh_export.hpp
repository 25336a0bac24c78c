#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsurf/grid.hpp"

namespace wsurf {

struct SurfaceMesh {
    int n1 = 0, n2 = 0;
    std::vector<int> vertex_of_node; ///< row-major, -1 for masked nodes
    std::vector<cplx> params;        ///< parameter point of each vertex
    std::vector<Point3> vertices;
    std::vector<double> u, abs_q, h_residual;
    std::vector<std::array<int, 4>> faces; ///< 0-based quads over valid nodes

    std::size_t vertex_count() const { return vertices.size(); }
};

/// Quads are emitted for every grid cell whose four corners were accepted.
SurfaceMesh build_mesh(const GridResult& grid);

enum class MeshFormat { Obj, Ply, Csv };

/// Throws Error(ParseError) for unknown names.
MeshFormat parse_mesh_format(const std::string& name);

/// Returns the number of bytes written. Throws Error(EmptyMesh) when the mesh
/// has no vertices and Error(IoFailure) when the destination cannot be written.
std::size_t export_mesh(const SurfaceMesh& mesh, MeshFormat format, std::ostream& out);
std::size_t export_mesh(const SurfaceMesh& mesh, MeshFormat format, const std::string& path);

} // namespace wsurf

#pragma once

#include <array>

#include "wsurf/matrix2.hpp"
#include "wsurf/weierstrass.hpp"

namespace wsurf {

using Point3 = std::array<double, 3>;

/// F = (1/2 Re(J1 - J3), -1/2 Im(J1 + J3), Re J2).
Point3 immersion_from_integrals(const PathIntegrals& j);
/// -(i/2) [[J2 + conj J2, J1 - conj J3], [conj J1 - J3, -(J2 + conj J2)]].
Matrix2C quaternionic_from_integrals(const PathIntegrals& j);

/// -i (F1 s1 + F2 s2 + F3 s3).
Matrix2C pauli_embedding(const Point3& f);
/// Inverse of pauli_embedding for su(2) matrices.
Point3 pauli_components(const Matrix2C& m);

/// Enneper-Weierstrass immersion along `path` (from xi0 to xi).
Point3 immerse_ew(const WeierstrassData& data, const ContourPath& path);
/// Same with the path planned around the data's obstacles.
Point3 immerse_ew(const WeierstrassData& data, cplx xi0, cplx xi);

Matrix2C to_quaternionic(const WeierstrassData& data, const ContourPath& path);
Matrix2C to_quaternionic(const WeierstrassData& data, cplx xi0, cplx xi);

/// (-i / (1 + |chi|^2)) [[1 - |chi|^2, 2 conj chi], [2 chi, -(1 - |chi|^2)]].
Matrix2C sym_tafel(cplx chi);

} // namespace wsurf

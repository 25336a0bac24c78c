#include "wsurf/immersion.hpp"

#include "wsurf/path_planner.hpp"

namespace wsurf {

namespace {
constexpr cplx kI{0.0, 1.0};
}

Point3 immersion_from_integrals(const PathIntegrals& j) {
    return {0.5 * (j.j1 - j.j3).real(), -0.5 * (j.j1 + j.j3).imag(), j.j2.real()};
}

Matrix2C quaternionic_from_integrals(const PathIntegrals& j) {
    const cplx s = -0.5 * kI;
    const cplx d = j.j2 + std::conj(j.j2);
    return {s * d, s * (j.j1 - std::conj(j.j3)), s * (std::conj(j.j1) - j.j3), -(s * d)};
}

Matrix2C pauli_embedding(const Point3& f) {
    return -kI * (cplx(f[0]) * kSigma1 + cplx(f[1]) * kSigma2 + cplx(f[2]) * kSigma3);
}

Point3 pauli_components(const Matrix2C& m) {
    // m = -i [[F3, F1 - i F2], [F1 + i F2, -F3]]
    const cplx a11 = kI * m.a11, a21 = kI * m.a21;
    return {a21.real(), a21.imag(), a11.real()};
}

Point3 immerse_ew(const WeierstrassData& data, const ContourPath& path) {
    return immersion_from_integrals(data.integrate_path(path).integrals);
}

Point3 immerse_ew(const WeierstrassData& data, cplx xi0, cplx xi) {
    if (xi0 == xi) return {0.0, 0.0, 0.0};
    return immerse_ew(data, plan_path(xi0, xi, data.obstacles()));
}

Matrix2C to_quaternionic(const WeierstrassData& data, const ContourPath& path) {
    return quaternionic_from_integrals(data.integrate_path(path).integrals);
}

Matrix2C to_quaternionic(const WeierstrassData& data, cplx xi0, cplx xi) {
    if (xi0 == xi) return {};
    return to_quaternionic(data, plan_path(xi0, xi, data.obstacles()));
}

Matrix2C sym_tafel(cplx chi) {
    const double n = std::norm(chi);
    const cplx s = -kI / (1.0 + n);
    return {s * (1.0 - n), s * (2.0 * std::conj(chi)), s * (2.0 * chi), -(s * (1.0 - n))};
}

} // namespace wsurf

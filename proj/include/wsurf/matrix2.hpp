#pragma once

#include <array>
#include <cmath>

#include "wsurf/errors.hpp"

namespace wsurf {

using Vec2C = std::array<cplx, 2>;

struct Matrix2C {
    cplx a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

    cplx trace() const { return a11 + a22; }
    cplx det() const { return a11 * a22 - a12 * a21; }
    /// Conjugate transpose.
    Matrix2C adjoint() const { return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)}; }
    /// Frobenius norm.
    double norm() const { return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) + std::norm(a22)); }

    Vec2C operator*(const Vec2C& v) const { return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]}; }
};

inline Matrix2C operator+(const Matrix2C& a, const Matrix2C& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}
inline Matrix2C operator-(const Matrix2C& a, const Matrix2C& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}
inline Matrix2C operator*(cplx s, const Matrix2C& m) { return {s * m.a11, s * m.a12, s * m.a21, s * m.a22}; }
inline Matrix2C operator*(const Matrix2C& a, const Matrix2C& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22, a.a21 * b.a11 + a.a22 * b.a21,
            a.a21 * b.a12 + a.a22 * b.a22};
}

inline double norm(const Vec2C& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

// Pauli basis.
inline const Matrix2C kSigma1{0.0, 1.0, 1.0, 0.0};
inline const Matrix2C kSigma2{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0};
inline const Matrix2C kSigma3{1.0, 0.0, 0.0, -1.0};

} // namespace wsurf

#include "wsurf/polynomials.hpp"

namespace wsurf {

namespace {

Poly axpy(cplx a, const Poly& x, cplx b, const Poly& y) {
    Poly out(std::max(x.size(), y.size()), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += a * x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] += b * y[i];
    return out;
}

Poly times_z(const Poly& p) {
    Poly out(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
    return out;
}

void require_degree(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "polynomial degree must be non-negative");
}

// p_{k+1} = (a_k + b_k z) p_k + c_k p_{k-1}
template <class Coeffs>
Poly recurrence(int n, Poly p0, Poly p1, Coeffs coeffs) {
    require_degree(n);
    if (n == 0) return p0;
    for (int k = 1; k < n; ++k) {
        const auto [a, b, c] = coeffs(k);
        Poly next = axpy(a, p1, b, times_z(p1));
        next = axpy(1.0, next, c, p0);
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

struct Step {
    cplx a, b, c;
};

} // namespace

PolyValue evaluate(const Poly& p, cplx z) {
    cplx v = 0.0, d1 = 0.0, d2 = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) {
        d2 = d2 * z + 2.0 * d1;
        d1 = d1 * z + v;
        v = v * z + p[i];
    }
    return {v, d1, d2};
}

Poly legendre_p(int n) {
    return recurrence(n, {1.0}, {0.0, 1.0}, [](int k) {
        return Step{0.0, (2.0 * k + 1.0) / (k + 1.0), -double(k) / (k + 1.0)};
    });
}

Poly chebyshev_t(int n) {
    return recurrence(n, {1.0}, {0.0, 1.0}, [](int) { return Step{0.0, 2.0, -1.0}; });
}

Poly chebyshev_u(int n) {
    return recurrence(n, {1.0}, {0.0, 2.0}, [](int) { return Step{0.0, 2.0, -1.0}; });
}

Poly hermite_h(int n) {
    return recurrence(n, {1.0}, {0.0, 2.0}, [](int k) { return Step{0.0, 2.0, -2.0 * k}; });
}

Poly laguerre_l(int n, cplx alpha) {
    return recurrence(n, {1.0}, {1.0 + alpha, -1.0}, [alpha](int k) {
        const double k1 = k + 1.0;
        return Step{(2.0 * k + 1.0 + alpha) / k1, -1.0 / k1, -(double(k) + alpha) / k1};
    });
}

Poly gegenbauer_c(int n, cplx alpha) {
    return recurrence(n, {1.0}, {0.0, 2.0 * alpha}, [alpha](int k) {
        const double k1 = k + 1.0;
        return Step{0.0, 2.0 * (double(k) + alpha) / k1, -(double(k) + 2.0 * alpha - 1.0) / k1};
    });
}

Poly jacobi_p(int n, cplx a, cplx b) {
    const cplx s = a + b;
    Poly p1 = {(a + 1.0) - 0.5 * (s + 2.0), 0.5 * (s + 2.0)};
    return recurrence(n, {1.0}, p1, [a, b, s](int k) {
        const cplx t = 2.0 * double(k) + s;
        const cplx den = 2.0 * double(k + 1) * (double(k) + s + 1.0) * t;
        return Step{(t + 1.0) * (a * a - b * b) / den, (t + 1.0) * (t + 2.0) * t / den,
                    -2.0 * (double(k) + a) * (double(k) + b) * (t + 2.0) / den};
    });
}

} // namespace wsurf

#pragma once

#include <vector>

#include "wsurf/errors.hpp"

namespace wsurf {

/// Coefficients in increasing degree.
using Poly = std::vector<cplx>;

struct PolyValue {
    cplx value, d1, d2;
};

PolyValue evaluate(const Poly& p, cplx z);

// Classical orthogonal polynomials from their three-term recurrences.
Poly legendre_p(int n);
Poly chebyshev_t(int n);
Poly chebyshev_u(int n);
Poly hermite_h(int n);
Poly laguerre_l(int n, cplx alpha = 0.0);
Poly gegenbauer_c(int n, cplx alpha);
Poly jacobi_p(int n, cplx alpha, cplx beta);

} // namespace wsurf

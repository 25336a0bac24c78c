#pragma once

#include <functional>
#include <string_view>

#include "wsurf/errors.hpp"

namespace wsurf {

using ComplexFn = std::function<cplx(cplx)>;

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

/// Principal-branch special functions.
///
/// Branch cuts (arguments exactly on a cut raise BranchCutViolation):
///   Ei, log, sqrt, power : (-inf, 0)
///   arcsin               : (-inf, -1) and (1, inf)
///   Li2                  : (1, inf)
///   erf                  : none
enum class SpecialFn { Ei, Log, Arcsin, Sqrt, Power, Erf, Li2 };

std::string_view to_string(SpecialFn fn) noexcept;

/// `exponent` is only used by SpecialFn::Power (z^a = exp(a log z)).
cplx eval_special(SpecialFn fn, cplx z, cplx exponent = 1.0);

// Direct entry points used by the catalog and fixtures.
cplx expint_ei(cplx z);
cplx principal_log(cplx z);
cplx principal_arcsin(cplx z);
cplx principal_sqrt(cplx z);
cplx principal_pow(cplx z, cplx a);
cplx erf_complex(cplx z);
cplx dilog(cplx z);

bool is_finite(cplx z) noexcept;

struct HoloDerivative {
    cplx value;        ///< d f or d^2 f
    double cr_residual; ///< |dbar f|, vanishes for holomorphic f
};

/// Central-difference holomorphic derivative. Step is 1e-5*max(1,|z|) for the
/// first derivative and 1e-4*max(1,|z|) for the second.
HoloDerivative holo_derivative(const ComplexFn& f, cplx z, int order = 1);

/// Same as above with an explicit step.
HoloDerivative holo_derivative_step(const ComplexFn& f, cplx z, int order, double h);

} // namespace wsurf

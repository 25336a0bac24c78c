#include "wsurf/complex_kernel.hpp"

#include <array>
#include <cmath>
#include <cstdio>

namespace wsurf {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::BranchCutViolation: return "BranchCutViolation";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::UnknownEquation: return "UnknownEquation";
    case ErrorCode::OutsideFixtureDomain: return "OutsideFixtureDomain";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::PathPlanningFailure: return "PathPlanningFailure";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::StencilOutsideDomain: return "StencilOutsideDomain";
    case ErrorCode::EmptyMesh: return "EmptyMesh";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::string format_complex(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string_view to_string(SpecialFn fn) noexcept {
    switch (fn) {
    case SpecialFn::Ei: return "Ei";
    case SpecialFn::Log: return "log";
    case SpecialFn::Arcsin: return "arcsin";
    case SpecialFn::Sqrt: return "sqrt";
    case SpecialFn::Power: return "power";
    case SpecialFn::Erf: return "erf";
    case SpecialFn::Li2: return "Li2";
    }
    return "?";
}

bool is_finite(cplx z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

namespace {

bool on_negative_axis(cplx z) { return z.imag() == 0.0 && z.real() < 0.0; }

void require_finite(cplx z) {
    if (!is_finite(z)) throw EvaluationFailure(z);
}

} // namespace

cplx principal_log(cplx z) {
    require_finite(z);
    if (z == cplx(0.0)) throw Error(ErrorCode::DomainError, "log: argument is zero");
    if (on_negative_axis(z)) throw BranchCutViolation("log", z);
    return std::log(z);
}

cplx principal_sqrt(cplx z) {
    require_finite(z);
    if (on_negative_axis(z)) throw BranchCutViolation("sqrt", z);
    return std::sqrt(z);
}

cplx principal_pow(cplx z, cplx a) {
    require_finite(z);
    if (z == cplx(0.0)) {
        if (a.real() > 0.0) return 0.0;
        throw Error(ErrorCode::DomainError, "power: zero base with non-positive exponent");
    }
    if (on_negative_axis(z)) throw BranchCutViolation("power", z);
    return std::exp(a * std::log(z));
}

cplx principal_arcsin(cplx z) {
    require_finite(z);
    if (z.imag() == 0.0 && std::abs(z.real()) > 1.0) throw BranchCutViolation("arcsin", z);
    return std::asin(z);
}

namespace {

// E1(w) by the even continued fraction e^{-w} / (w + 1 - 1/(w + 3 - 4/(w + 5 - ...))),
// modified Lentz. Converges for w off the negative real axis.
cplx e1_continued_fraction(cplx w) {
    constexpr double tiny = 1e-300;
    cplx b = w + 1.0;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int n = 1; n < 20000; ++n) {
        const double a = -double(n) * double(n);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cplx delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return h * std::exp(-w);
    }
    throw Error(ErrorCode::ToleranceNotReached, "E1 continued fraction did not converge at " + format_complex(w));
}

// erfc(z) for Re z > 0: e^{-z^2}/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))).
cplx erfc_continued_fraction(cplx z) {
    constexpr double tiny = 1e-300;
    cplx f = z;
    cplx c = z;
    cplx d = 0.0;
    for (int n = 1; n < 20000; ++n) {
        const double a = 0.5 * n;
        d = z + a * d;
        if (d == cplx(0.0)) d = tiny;
        c = z + a / c;
        if (c == cplx(0.0)) c = tiny;
        d = 1.0 / d;
        const cplx delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return std::exp(-z * z) / (std::sqrt(kPi) * f);
    }
    throw Error(ErrorCode::ToleranceNotReached, "erfc continued fraction did not converge at " + format_complex(z));
}

} // namespace

// Series  sum_{k>=1} z^k/(k k!) + (log z - log(1/z))/2 + gamma  while the terms
// do not cancel much (|z| - Re z small); otherwise -E1(-z) +- i pi.
cplx expint_ei(cplx z) {
    require_finite(z);
    if (z == cplx(0.0)) throw Error(ErrorCode::DomainError, "Ei: argument is zero");
    if (on_negative_axis(z)) throw BranchCutViolation("Ei", z);

    if (std::abs(z) > 2.0 && std::abs(z) - z.real() > 4.0)
        return -e1_continued_fraction(-z) + cplx(0.0, z.imag() > 0.0 ? kPi : -kPi);

    cplx term = 1.0;
    cplx sum = 0.0;
    for (int k = 1; k < 2000; ++k) {
        term *= z / double(k);
        const cplx add = term / double(k);
        sum += add;
        if (k > std::abs(z) && std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    const cplx branch = 0.5 * (std::log(z) - std::log(1.0 / z));
    return sum + branch + kEulerGamma;
}

// Maclaurin series where |Re z| is small (cancellation ~ e^{2 x^2}), the erfc
// continued fraction elsewhere.
cplx erf_complex(cplx z) {
    require_finite(z);
    if (std::abs(z) > 2.0 && std::abs(z.real()) > 1.2) {
        const cplx w = z.real() > 0.0 ? z : -z;
        const cplx e = 1.0 - erfc_continued_fraction(w);
        return z.real() > 0.0 ? e : -e;
    }
    const double two_over_sqrt_pi = 1.12837916709551257390;
    const cplx z2 = z * z;
    cplx sum = z;
    cplx power = z;
    for (int n = 1; n < 4000; ++n) {
        power *= -z2 / double(n);
        const cplx term = power / double(2 * n + 1);
        sum += term;
        if (n > std::norm(z) && std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return two_over_sqrt_pi * sum;
}

namespace {

// B_n / (n+1)! for n = 0, 1, 2, 4, ..., 28
cplx dilog_bernoulli_series(cplx u) {
    static const std::array<double, 15> bernoulli = {
        1.0 / 6.0,           -1.0 / 30.0,           1.0 / 42.0,          -1.0 / 30.0,
        5.0 / 66.0,          -691.0 / 2730.0,       7.0 / 6.0,           -3617.0 / 510.0,
        43867.0 / 798.0,     -174611.0 / 330.0,     854513.0 / 138.0,    -236364091.0 / 2730.0,
        8553103.0 / 6.0,     -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};
    cplx sum = u - 0.25 * u * u;
    const cplx u2 = u * u;
    cplx upow = u; // u^{n+1} for n = 2k
    double fact = 1.0; // (n+1)!
    for (std::size_t k = 0; k < bernoulli.size(); ++k) {
        const int n = 2 * int(k) + 2;
        upow *= u2;
        fact *= double(n) * double(n + 1);
        const cplx add = bernoulli[k] * upow / fact;
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

cplx dilog_impl(cplx z) {
    const double pi2_6 = kPi * kPi / 6.0;
    if (z == cplx(0.0)) return 0.0;
    if (z == cplx(1.0)) return pi2_6;
    if (std::norm(z) <= 0.25) {
        cplx sum = 0.0;
        cplx power = 1.0;
        for (int k = 1; k < 200; ++k) {
            power *= z;
            const cplx add = power / double(k * k);
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    if (std::abs(z) > 1.0) {
        const cplx l = std::log(-z);
        return -dilog_impl(1.0 / z) - pi2_6 - 0.5 * l * l;
    }
    if (z.real() > 0.5) return -dilog_impl(1.0 - z) + pi2_6 - std::log(z) * std::log(1.0 - z);
    return dilog_bernoulli_series(-std::log(1.0 - z));
}

} // namespace

cplx dilog(cplx z) {
    require_finite(z);
    if (z.imag() == 0.0 && z.real() > 1.0) throw BranchCutViolation("Li2", z);
    return dilog_impl(z);
}

cplx eval_special(SpecialFn fn, cplx z, cplx exponent) {
    cplx value;
    switch (fn) {
    case SpecialFn::Ei: value = expint_ei(z); break;
    case SpecialFn::Log: value = principal_log(z); break;
    case SpecialFn::Arcsin: value = principal_arcsin(z); break;
    case SpecialFn::Sqrt: value = principal_sqrt(z); break;
    case SpecialFn::Power: value = principal_pow(z, exponent); break;
    case SpecialFn::Erf: value = erf_complex(z); break;
    case SpecialFn::Li2: value = dilog(z); break;
    }
    if (!is_finite(value)) throw EvaluationFailure(z);
    return value;
}

HoloDerivative holo_derivative_step(const ComplexFn& f, cplx z, int order, double h) {
    const cplx ih(0.0, h);
    const cplx fxp = f(z + h), fxm = f(z - h), fyp = f(z + ih), fym = f(z - ih);
    const cplx fx = (fxp - fxm) / (2.0 * h);
    const cplx fy = (fyp - fym) / (2.0 * h);
    const cplx I(0.0, 1.0);
    const double dbar = std::abs(0.5 * (fx + I * fy));
    if (order == 1) {
        const cplx d = 0.5 * (fx - I * fy);
        if (!is_finite(d)) throw EvaluationFailure(z);
        return {d, dbar};
    }
    if (order != 2) throw Error(ErrorCode::InvalidArgument, "holo_derivative: order must be 1 or 2");
    const cplx f0 = f(z);
    const cplx fxx = (fxp - 2.0 * f0 + fxm) / (h * h);
    const cplx fyy = (fyp - 2.0 * f0 + fym) / (h * h);
    const cplx fxy = (f(z + h + ih) - f(z + h - ih) - f(z - h + ih) + f(z - h - ih)) / (4.0 * h * h);
    const cplx d2 = 0.25 * (fxx - fyy - 2.0 * I * fxy);
    if (!is_finite(d2)) throw EvaluationFailure(z);
    return {d2, dbar};
}

HoloDerivative holo_derivative(const ComplexFn& f, cplx z, int order) {
    const double scale = std::max(1.0, std::abs(z));
    return holo_derivative_step(f, z, order, (order == 1 ? 1e-5 : 1e-4) * scale);
}

} // namespace wsurf

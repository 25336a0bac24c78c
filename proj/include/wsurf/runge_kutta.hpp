#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "wsurf/errors.hpp"

namespace wsurf {

template <int Stages>
struct Tableau {
    std::array<double, Stages> c;
    std::array<std::array<double, Stages>, Stages> a;
    std::array<double, Stages> b;     ///< propagated (higher) order
    std::array<double, Stages> b_low; ///< embedded lower order
    int order;
};

/// Fehlberg 4(5), propagating the fifth-order solution.
inline constexpr Tableau<6> kFehlberg45 = {
    {0.0, 1.0 / 4.0, 3.0 / 8.0, 12.0 / 13.0, 1.0, 1.0 / 2.0},
    {{{},
      {1.0 / 4.0},
      {3.0 / 32.0, 9.0 / 32.0},
      {1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0},
      {439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0},
      {-8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0}}},
    {16.0 / 135.0, 0.0, 6656.0 / 12825.0, 28561.0 / 56430.0, -9.0 / 50.0, 2.0 / 55.0},
    {25.0 / 216.0, 0.0, 1408.0 / 2565.0, 2197.0 / 4104.0, -1.0 / 5.0, 0.0},
    5};

/// Dormand-Prince 5(4).
inline constexpr Tableau<7> kDormandPrince54 = {
    {0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0},
    {{{},
      {1.0 / 5.0},
      {3.0 / 40.0, 9.0 / 40.0},
      {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
      {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
      {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0},
      {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0}}},
    {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0},
    {5179.0 / 57600.0, 0.0, 7571.0 / 16695.0, 393.0 / 640.0, -92097.0 / 339200.0, 187.0 / 2100.0, 1.0 / 40.0},
    5};

struct StepControl {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    double min_step = 1e-13; ///< in units of the parameter interval
    int max_steps = 200000;
};

template <std::size_t N>
using CState = std::array<cplx, N>;

/// Integrates dy/dt = f(t, y) for t in [0, 1] with an embedded Runge-Kutta pair.
/// The first attempt covers the whole interval so short hops take one step.
/// Throws Error(StepSizeUnderflow) when the step collapses (typically next to a
/// singular point) and EvaluationFailure on non-finite stages.
template <int S, std::size_t N, class F>
CState<N> integrate_unit(const Tableau<S>& tab, F&& f, CState<N> y, const StepControl& ctl, int* steps_taken = nullptr) {
    double t = 0.0;
    double h = 1.0;
    int steps = 0;
    std::array<CState<N>, S> k;
    while (t < 1.0) {
        if (++steps > ctl.max_steps) throw Error(ErrorCode::StepSizeUnderflow, "step budget exhausted");
        if (t + h > 1.0) h = 1.0 - t;
        for (int s = 0; s < S; ++s) {
            CState<N> ys = y;
            for (int j = 0; j < s; ++j)
                if (tab.a[s][j] != 0.0)
                    for (std::size_t i = 0; i < N; ++i) ys[i] += (h * tab.a[s][j]) * k[j][i];
            k[s] = f(t + tab.c[s] * h, ys);
        }
        CState<N> hi = y;
        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            cplx delta_hi = 0.0, delta_lo = 0.0;
            for (int s = 0; s < S; ++s) {
                delta_hi += tab.b[s] * k[s][i];
                delta_lo += tab.b_low[s] * k[s][i];
            }
            hi[i] += h * delta_hi;
            const double scale = ctl.abs_tol + ctl.rel_tol * std::max(std::abs(y[i]), std::abs(hi[i]));
            err = std::max(err, h * std::abs(delta_hi - delta_lo) / scale);
        }
        if (!std::isfinite(err)) {
            h *= 0.25;
            if (h < ctl.min_step) throw Error(ErrorCode::StepSizeUnderflow, "non-finite stage with vanishing step");
            continue;
        }
        if (err <= 1.0) {
            t += h;
            y = hi;
            if (1.0 - t < 1e-15) break;
        }
        const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -1.0 / tab.order), 0.2, 5.0);
        h *= factor;
        if (h < ctl.min_step && t < 1.0) throw Error(ErrorCode::StepSizeUnderflow, "Runge-Kutta step underflow");
    }
    if (steps_taken) *steps_taken = steps;
    return y;
}

/// Non-adaptive variant with `n` equal steps. Used for short hops where the
/// result must depend smoothly on the endpoint (finite-difference stencils).
template <int S, std::size_t N, class F>
CState<N> integrate_fixed(const Tableau<S>& tab, F&& f, CState<N> y, int n) {
    const double h = 1.0 / n;
    std::array<CState<N>, S> k;
    for (int step = 0; step < n; ++step) {
        const double t = step * h;
        for (int s = 0; s < S; ++s) {
            CState<N> ys = y;
            for (int j = 0; j < s; ++j)
                if (tab.a[s][j] != 0.0)
                    for (std::size_t i = 0; i < N; ++i) ys[i] += (h * tab.a[s][j]) * k[j][i];
            k[s] = f(t + tab.c[s] * h, ys);
        }
        for (std::size_t i = 0; i < N; ++i) {
            cplx delta = 0.0;
            for (int s = 0; s < S; ++s) delta += tab.b[s] * k[s][i];
            y[i] += h * delta;
        }
    }
    return y;
}

} // namespace wsurf

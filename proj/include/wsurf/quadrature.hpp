#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "wsurf/complex_kernel.hpp"
#include "wsurf/contour.hpp"

namespace wsurf {

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_depth = 40;
    int max_panels = 4000;
};

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

inline double magnitude(cplx z) { return std::abs(z); }

template <std::size_t N>
double magnitude(const std::array<cplx, N>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::abs(x));
    return m;
}

inline bool all_finite(cplx z) { return is_finite(z); }

template <std::size_t N>
bool all_finite(const std::array<cplx, N>& v) {
    return std::all_of(v.begin(), v.end(), [](cplx z) { return is_finite(z); });
}

template <std::size_t N>
std::array<cplx, N>& operator+=(std::array<cplx, N>& a, const std::array<cplx, N>& b) {
    for (std::size_t i = 0; i < N; ++i) a[i] += b[i];
    return a;
}

template <std::size_t N>
std::array<cplx, N> operator-(const std::array<cplx, N>& a, const std::array<cplx, N>& b) {
    std::array<cplx, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] - b[i];
    return out;
}

template <std::size_t N>
std::array<cplx, N> operator*(cplx s, const std::array<cplx, N>& a) {
    std::array<cplx, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = s * a[i];
    return out;
}

namespace detail {

// Gauss-Kronrod 7/15 abscissae (non-negative half) and weights.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

enum class SegmentMap { Linear, SingularStart, SingularEnd, SingularBoth };

struct Segment {
    cplx a, b;
    SegmentMap map;

    // Returns the point and d(xi)/dt for t in [0, 1].
    std::pair<cplx, cplx> at(double t) const {
        const cplx d = b - a;
        switch (map) {
        case SegmentMap::Linear: return {a + t * d, d};
        case SegmentMap::SingularStart: return {a + (t * t) * d, 2.0 * t * d};
        case SegmentMap::SingularEnd: {
            const double s = 1.0 - t;
            return {b - (s * s) * d, 2.0 * s * d};
        }
        case SegmentMap::SingularBoth: return {a + (t * t * (3.0 - 2.0 * t)) * d, 6.0 * t * (1.0 - t) * d};
        }
        return {a, d};
    }
};

template <class T>
struct Panel {
    std::size_t segment;
    double t0, t1;
    int depth;
    T value;
    double error;
    double resabs;
};

template <class T, class F>
Panel<T> evaluate_panel(F& f, const Segment& seg, std::size_t index, double t0, double t1, int depth) {
    const double mid = 0.5 * (t0 + t1);
    const double half = 0.5 * (t1 - t0);
    T kronrod{};
    T gauss{};
    double resabs = 0.0;
    auto sample = [&](double x) {
        const auto [xi, jac] = seg.at(mid + half * x);
        const T fx = f(xi);
        if (!all_finite(fx)) throw EvaluationFailure(xi);
        return (jac * half) * fx;
    };
    for (std::size_t k = 0; k < 7; ++k) {
        const T lo = sample(-kXgk[k]);
        const T hi = sample(kXgk[k]);
        kronrod += kWgk[k] * lo;
        kronrod += kWgk[k] * hi;
        resabs += kWgk[k] * (magnitude(lo) + magnitude(hi));
        if (k % 2 == 1) {
            gauss += kWg[k / 2] * lo;
            gauss += kWg[k / 2] * hi;
        }
    }
    const T center = sample(0.0);
    kronrod += kWgk[7] * center;
    gauss += kWg[3] * center;
    resabs += kWgk[7] * magnitude(center);
    return {index, t0, t1, depth, kronrod, magnitude(kronrod - gauss), resabs};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 along a set of segments. Segments whose
/// endpoint sits on a singular centre are reparametrised so that inverse
/// square-root endpoint singularities become smooth.
template <class T, class F>
QuadResult<T> integrate_segments(F&& f, const std::vector<detail::Segment>& segments, const QuadOptions& opt) {
    using detail::Panel;
    std::vector<Panel<T>> heap;
    std::vector<Panel<T>> settled;
    auto by_error = [](const Panel<T>& x, const Panel<T>& y) { return x.error < y.error; };
    int evaluations = 0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        heap.push_back(detail::evaluate_panel<T>(f, segments[i], i, 0.0, 1.0, 0));
        evaluations += 15;
    }
    std::make_heap(heap.begin(), heap.end(), by_error);

    auto totals = [&]() {
        T value{};
        double error = 0.0, resabs = 0.0;
        for (const auto* list : {&heap, &settled})
            for (const auto& p : *list) {
                value += p.value;
                error += p.error;
                resabs += p.resabs;
            }
        return std::tuple<T, double, double>(value, error, resabs);
    };

    auto [value, error, resabs] = totals();
    auto target = [&](const T& v, double abs_sum) {
        return std::max({opt.abs_tol, opt.rel_tol * magnitude(v), 1e-15 * abs_sum});
    };
    int panels = int(heap.size());
    while (error > target(value, resabs) && !heap.empty() && panels < opt.max_panels) {
        std::pop_heap(heap.begin(), heap.end(), by_error);
        Panel<T> worst = heap.back();
        heap.pop_back();
        if (worst.depth >= opt.max_depth) {
            settled.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.t0 + worst.t1);
        const auto& seg = segments[worst.segment];
        auto left = detail::evaluate_panel<T>(f, seg, worst.segment, worst.t0, mid, worst.depth + 1);
        auto right = detail::evaluate_panel<T>(f, seg, worst.segment, mid, worst.t1, worst.depth + 1);
        evaluations += 30;
        ++panels;
        value += left.value;
        value += right.value;
        value = value - worst.value;
        error += left.error + right.error - worst.error;
        resabs += left.resabs + right.resabs - worst.resabs;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
    }
    std::tie(value, error, resabs) = totals();
    QuadResult<T> out;
    out.value = value;
    out.error = error;
    out.evaluations = evaluations;
    out.converged = error <= target(value, resabs);
    return out;
}

std::vector<detail::Segment> path_segments(const ContourPath& path);

template <class T, class F>
QuadResult<T> integrate_path(F&& f, const ContourPath& path, const QuadOptions& opt) {
    return integrate_segments<T>(std::forward<F>(f), path_segments(path), opt);
}

template <class T, class F>
QuadResult<T> integrate_line(F&& f, cplx a, cplx b, const QuadOptions& opt) {
    return integrate_segments<T>(std::forward<F>(f), {detail::Segment{a, b, detail::SegmentMap::Linear}}, opt);
}

/// Integral of f along the path with absolute error <= tol.
/// Throws ToleranceNotReached(best, achieved) if the budget cannot be met.
cplx contour_quad(const ComplexFn& f, const ContourPath& path, double tol);

} // namespace wsurf

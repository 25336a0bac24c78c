#include "wsurf/geometry.hpp"

#include <limits>

namespace wsurf {

namespace {

constexpr int kHalf = 4; // lattice is (2*kHalf+1)^2
constexpr int kSize = 2 * kHalf + 1;

using Vec3 = Point3;

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Fourth-order central differences on values at offsets -2..2.
template <class T>
T d1(const T& m2, const T& m1, const T& p1, const T& p2, double h) {
    return (1.0 / (12.0 * h)) * ((m2 - p2) + 8.0 * (p1 - m1));
}
template <class T>
T d2(const T& m2, const T& m1, const T& c, const T& p1, const T& p2, double h) {
    return (1.0 / (12.0 * h * h)) * ((-1.0 * (m2 + p2)) + 16.0 * (m1 + p1) + (-30.0) * c);
}

cplx d1c(cplx m2, cplx m1, cplx p1, cplx p2, double h) { return ((m2 - p2) + 8.0 * (p1 - m1)) / (12.0 * h); }
double d2s(double m2, double m1, double c, double p1, double p2, double h) {
    return (-(m2 + p2) + 16.0 * (m1 + p1) - 30.0 * c) / (12.0 * h * h);
}

struct Lattice {
    std::array<std::array<Vec3, kSize>, kSize> f; // f[i][j] at offset (i - kHalf, j - kHalf) h
    double h;

    const Vec3& at(int i, int j) const { return f[i + kHalf][j + kHalf]; }

    Vec3 fx(int i, int j) const { return d1(at(i - 2, j), at(i - 1, j), at(i + 1, j), at(i + 2, j), h); }
    Vec3 fy(int i, int j) const { return d1(at(i, j - 2), at(i, j - 1), at(i, j + 1), at(i, j + 2), h); }
    Vec3 fxx(int i, int j) const { return d2(at(i - 2, j), at(i - 1, j), at(i, j), at(i + 1, j), at(i + 2, j), h); }
    Vec3 fyy(int i, int j) const { return d2(at(i, j - 2), at(i, j - 1), at(i, j), at(i, j + 1), at(i, j + 2), h); }
    Vec3 fxy(int i, int j) const { return d1(fy(i - 2, j), fy(i - 1, j), fy(i + 1, j), fy(i + 2, j), h); }
};

struct PointGeometry {
    double u;
    cplx q;
    Vec3 n;
    Vec3 fx, fy, fxx, fyy;
};

PointGeometry point_geometry(const Lattice& l, int i, int j) {
    PointGeometry g;
    g.fx = l.fx(i, j);
    g.fy = l.fy(i, j);
    g.fxx = l.fxx(i, j);
    g.fyy = l.fyy(i, j);
    const Vec3 fxy = l.fxy(i, j);
    // (dF|dbar F) = (|Fx|^2 + |Fy|^2)/4 = e^u / 2
    g.u = std::log(0.5 * (dot(g.fx, g.fx) + dot(g.fy, g.fy)));
    const Vec3 n = cross(g.fx, g.fy);
    g.n = (1.0 / std::sqrt(dot(n, n))) * n;
    // d^2 F = (Fxx - Fyy - 2i Fxy) / 4
    g.q = cplx(0.25 * (dot(g.fxx, g.n) - dot(g.fyy, g.n)), -0.5 * dot(fxy, g.n));
    return g;
}

double singular_distance(const WeierstrassData& data, cplx z) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& disc : data.obstacles().discs) d = std::min(d, std::abs(z - disc.center));
    return d;
}

} // namespace

double default_geometry_step(const WeierstrassData& data, cplx z) {
    return 1e-3 * std::min(1.0, singular_distance(data, z));
}

GeometryReport geometry_report(const WeierstrassData& data, cplx z, double h) {
    if (data.is_singular(z)) throw Error(ErrorCode::StencilOutsideDomain, "stencil centred on a singular point");
    return geometry_report(data.chart(z), data, h);
}

GeometryReport geometry_report(const LocalChart& chart, const WeierstrassData& data, double h) {
    const cplx z = chart.center();
    if (h <= 0.0) h = default_geometry_step(data, z);
    // Hops from the centre continue the data analytically, so cuts do not
    // matter here; only the singular points themselves do.
    const double reach = std::sqrt(2.0) * kHalf * h;
    if (!(reach < 0.5 * singular_distance(data, z)))
        throw Error(ErrorCode::StencilOutsideDomain, "stencil around " + format_complex(z) + " reaches a singular point");
    // Closed forms are evaluated pointwise on their principal branches, which
    // jump across cuts.
    if (data.source() == DataSource::ClosedForm)
        for (const auto& cut : data.obstacles().cuts)
            for (int i = -kHalf; i <= kHalf; ++i)
                for (int j = -kHalf; j <= kHalf; ++j)
                    if (segment_crosses_cut(z, z + h * cplx(i, j), cut))
                        throw Error(ErrorCode::StencilOutsideDomain,
                                    "stencil around " + format_complex(z) + " crosses a branch cut");

    Lattice l;
    l.h = h;
    for (int i = -kHalf; i <= kHalf; ++i)
        for (int j = -kHalf; j <= kHalf; ++j)
            l.f[i + kHalf][j + kHalf] = immersion_from_integrals(chart.integrals_to(z + h * cplx(i, j)));

    GeometryReport r{};
    r.z = z;
    r.h = h;
    const PointGeometry c = point_geometry(l, 0, 0);
    r.u = c.u;
    r.Q = c.q;
    r.normal = c.n;

    // dF = (Fx - i Fy) / 2, complex-bilinear square
    cplx conf = 0.0;
    for (int k = 0; k < 3; ++k) {
        const cplx dk(0.5 * c.fx[k], -0.5 * c.fy[k]);
        conf += dk * dk;
    }
    r.conformality = std::abs(conf);
    const double dfdf = 0.25 * (dot(c.fx, c.fx) + dot(c.fy, c.fy));
    r.H = 2.0 * std::exp(-c.u) * 0.25 * dot(c.fxx + c.fyy, c.n);

    // Data side.
    const DataValue v = chart.at_center();
    const cplx lambda = data.constants().lambda;
    cplx dchi;
    if (const LinearODE* ode = data.ode()) dchi = -coefficient_ratios(*ode, z).r_over_p / (lambda * v.eta_sq);
    else dchi = holo_derivative(chart.chi_fn(), z, 1).value;
    const double half_scale = 0.5 * std::abs(v.eta_sq) * (1.0 + std::norm(v.chi));
    r.u_data = 2.0 * std::log(half_scale);
    r.Q_data = -0.5 * v.eta_sq * dchi;
    r.metric = std::abs(dfdf - 0.5 * std::exp(r.u_data));
    r.metric_unhalved = std::abs(dfdf - 0.5 * 4.0 * std::exp(r.u_data));
    r.hopf = std::abs(r.Q - r.Q_data) / std::max(1.0, std::abs(r.Q_data));
    r.hopf_unhalved = std::abs(r.Q - 2.0 * r.Q_data) / std::max(1.0, std::abs(r.Q_data));

    // Q and u on the plus-shaped neighbourhood.
    std::array<PointGeometry, 5> gx, gy;
    for (int k = -2; k <= 2; ++k) {
        gx[k + 2] = k == 0 ? c : point_geometry(l, k, 0);
        gy[k + 2] = k == 0 ? c : point_geometry(l, 0, k);
    }
    const cplx qx = d1c(gx[0].q, gx[1].q, gx[3].q, gx[4].q, h);
    const cplx qy = d1c(gy[0].q, gy[1].q, gy[3].q, gy[4].q, h);
    r.hopf_holomorphy = std::abs(0.5 * (qx + cplx(0.0, 1.0) * qy)) / std::max(1.0, std::abs(c.q));
    const double lap = d2s(gx[0].u, gx[1].u, c.u, gx[3].u, gx[4].u, h) + d2s(gy[0].u, gy[1].u, c.u, gy[3].u, gy[4].u, h);
    const double rhs = 2.0 * std::norm(c.q) * std::exp(-c.u);
    r.liouville = std::abs(0.25 * lap - rhs) / std::max(1.0, rhs);
    return r;
}

} // namespace wsurf

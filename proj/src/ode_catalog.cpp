#include "wsurf/ode_catalog.hpp"

#include <cmath>

#include "wsurf/quadrature.hpp"

namespace wsurf {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

const CutRay kNegativeAxisFromZero{0.0, -1.0};
const CutRay kLeftOfMinusOne{-1.0, -1.0};
const CutRay kRightOfOne{1.0, 1.0};

DomainSpec polar(double r0, double r1, double t0, double t1) { return {DomainSpec::Kind::Polar, r0, r1, t0, t1}; }
DomainSpec cartesian(double x0, double x1, double y0, double y1) {
    return {DomainSpec::Kind::Cartesian, x0, x1, y0, y1};
}

bool is_nonneg_integer(cplx v) {
    return v.imag() == 0.0 && v.real() >= 0.0 && v.real() == std::round(v.real()) && v.real() < 171.0;
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Upper incomplete gamma for a non-negative integer order.
cplx upper_gamma_int(int a1, cplx z) {
    cplx sum = 0.0, term = 1.0;
    for (int k = 0; k < a1; ++k) {
        sum += term;
        term *= z / double(k + 1);
    }
    return factorial(a1 - 1) * std::exp(-z) * sum;
}

BaseValues from_closed(const std::optional<ClosedForm>& cf, cplx z0) {
    return {cf->eta_sq(z0), cf->chi(z0)};
}

struct Builder {
    LinearODE ode;
    const ParamMap& overrides;

    void schema(std::vector<ParamSpec> specs) {
        for (const auto& s : specs) ode.params[s.name] = s.default_value;
        for (const auto& [k, v] : overrides) {
            if (!ode.params.count(k))
                throw Error(ErrorCode::InvalidArgument, "equation '" + ode.id + "' has no parameter '" + k + "'");
            ode.params[k] = v;
        }
        ode.schema = std::move(specs);
    }

    void closed(std::function<std::optional<ClosedForm>(const Constants&)> fn) {
        ode.closed_form = fn;
        const cplx z0 = ode.base_point;
        ode.base_values = [fn, z0](const Constants& k) { return from_closed(fn(k), z0); };
    }
};

void build_legendre(Builder& b) {
    b.ode.title = "Legendre";
    b.schema({{"alpha", 1.0, "degree"}});
    const cplx a = b.ode.param("alpha");
    const cplx d1 = a * (a + 1.0);
    b.ode.p = [](cplx z) { return 1.0 - z * z; };
    b.ode.q = [](cplx z) { return -2.0 * z; };
    b.ode.r = [d1](cplx) { return d1; };
    b.ode.singularities = {-1.0, 1.0};
    b.ode.cuts = {kLeftOfMinusOne, kRightOfOne};
    b.ode.base_point = 0.0;
    b.ode.default_domain = polar(0.02, 8.0, 0.0, 3.0 * kTwoPi);
    b.ode.default_constants = {1.0, 0.0, -2.0};
    b.ode.default_xi0 = cplx(0.5, 1.0);
    b.closed([d1](const Constants& k) {
        return ClosedForm{[k](cplx z) { return k.c1 * k.c1 / (1.0 - z * z); },
                          [k, d1](cplx z) { return -(d1 * z + k.c2) / (k.lambda * k.c1 * k.c1); }};
    });
}

void build_legendre_assoc(Builder& b) {
    b.ode.title = "associated Legendre";
    b.schema({{"alpha", 1.0, "degree"}, {"m", 1.0, "order"}});
    const cplx a = b.ode.param("alpha");
    const cplx m = b.ode.param("m");
    const cplx d = a * (a + 1.0);
    b.ode.p = [](cplx z) { return 1.0 - z * z; };
    b.ode.q = [](cplx z) { return -2.0 * z; };
    b.ode.r = [d, m](cplx z) { return d - m * m / (1.0 - z * z); };
    b.ode.singularities = {-1.0, 1.0};
    b.ode.cuts = {kLeftOfMinusOne, kRightOfOne};
    b.ode.base_point = 0.0;
    b.ode.default_domain = polar(0.02, 5.0, 0.0, kTwoPi);
    b.ode.default_constants = {1.0, 0.0, 0.5};
    b.ode.default_xi0 = cplx(-1.0, -1.0);
    b.closed([d, m](const Constants& k) {
        return ClosedForm{
            [k](cplx z) { return k.c1 * k.c1 / (1.0 - z * z); },
            [k, d, m](cplx z) {
                const cplx atanh2 = principal_log(1.0 + z) - principal_log(1.0 - z);
                return (0.5 * m * m * atanh2 - d * z + k.c2) / (k.lambda * k.c1 * k.c1);
            }};
    });
}

void build_bessel(Builder& b) {
    b.ode.title = "Bessel";
    b.schema({{"p", 0.0, "order"}});
    const cplx nu = b.ode.param("p");
    b.ode.p = [](cplx z) { return z * z; };
    b.ode.q = [](cplx z) { return z; };
    b.ode.r = [nu](cplx z) { return z * z - nu * nu; };
    b.ode.singularities = {0.0};
    b.ode.cuts = {kNegativeAxisFromZero};
    b.ode.base_point = 1.0;
    b.ode.default_domain = polar(0.01, 2.0, 0.0, kTwoPi);
    b.ode.default_constants = {1.0, 0.0, -0.5};
    b.ode.default_xi0 = 1.0;
    b.closed([nu](const Constants& k) {
        return ClosedForm{[k](cplx z) { return k.c1 / z; },
                          [k, nu](cplx z) {
                              const cplx lg = nu == 0.0 ? cplx(0.0) : nu * nu * principal_log(z);
                              return (lg - 0.5 * z * z + k.c2) / (k.lambda * k.c1);
                          }};
    });
}

void build_chebyshev(Builder& b, bool second_kind) {
    b.ode.title = second_kind ? "Chebyshev (second kind)" : "Chebyshev (first kind)";
    b.schema({{"n", 1.0, "degree"}});
    const cplx n = b.ode.param("n");
    // The second-kind entry reuses the first-kind form with n -> sqrt(n) sqrt(n+2).
    const cplx n2 = second_kind ? n * (n + 2.0) : n * n;
    b.ode.p = [](cplx z) { return 1.0 - z * z; };
    b.ode.q = [](cplx z) { return -z; };
    b.ode.r = [n2](cplx) { return n2; };
    b.ode.singularities = {-1.0, 1.0};
    b.ode.cuts = {kLeftOfMinusOne, kRightOfOne};
    b.ode.base_point = 0.0;
    b.ode.default_domain = polar(0.02, 10.0, 0.0, kTwoPi);
    b.ode.default_constants = {1.0, 0.0, -1.0};
    b.ode.default_xi0 = 1.0;
    if (second_kind) b.ode.note = "realised from the first-kind form with n -> sqrt(n)sqrt(n+2)";
    b.closed([n2](const Constants& k) {
        return ClosedForm{[k](cplx z) { return k.c1 / principal_sqrt(1.0 - z * z); },
                          [k, n2](cplx z) { return -(n2 * principal_arcsin(z) + k.c2) / (k.lambda * k.c1); }};
    });
}

void build_laguerre(Builder& b) {
    b.ode.title = "Laguerre";
    b.schema({{"alpha", 1.0, "degree"}});
    const cplx a = b.ode.param("alpha");
    b.ode.p = [](cplx z) { return z; };
    b.ode.q = [](cplx z) { return 1.0 - z; };
    b.ode.r = [a](cplx) { return a; };
    b.ode.singularities = {0.0};
    b.ode.cuts = {kNegativeAxisFromZero};
    b.ode.base_point = 1.0;
    b.ode.default_domain = polar(0.02, 3.0, 0.0, kTwoPi);
    b.ode.default_constants = {1.0, 0.0, 1.0};
    b.ode.default_xi0 = cplx(1.0, 1.0);
    b.closed([a](const Constants& k) {
        return ClosedForm{[k](cplx z) { return std::exp(z) / (k.c1 * z); },
                          [k, a](cplx z) { return (a * k.c1 * std::exp(-z) + k.c2) / k.lambda; }};
    });
}

void build_laguerre_assoc(Builder& b) {
    b.ode.title = "associated Laguerre";
    b.schema({{"alpha", 1.0, "order"}, {"n", 2.0, "degree"}});
    const cplx a = b.ode.param("alpha");
    const cplx n = b.ode.param("n");
    b.ode.p = [](cplx z) { return z; };
    b.ode.q = [a](cplx z) { return a + 1.0 - z; };
    b.ode.r = [n](cplx) { return n; };
    b.ode.singularities = {0.0};
    b.ode.cuts = {kNegativeAxisFromZero};
    b.ode.base_point = 1.0;
    b.ode.default_domain = cartesian(-3.0, 3.0, 1.0 / 64.0, 3.0);
    b.ode.default_constants = {1.0, 0.0, 1.0};
    b.ode.default_xi0 = cplx(3.0, 3.0);
    if (is_nonneg_integer(a)) {
        const int a1 = int(a.real()) + 1;
        b.closed([a1, n](const Constants& k) {
            return ClosedForm{[k, a1](cplx z) {
                                  cplx zp = 1.0;
                                  for (int j = 0; j < a1; ++j) zp *= z;
                                  return std::exp(z) / (k.c1 * zp);
                              },
                              [k, a1, n](cplx z) { return (n * k.c1 * upper_gamma_int(a1, z) + k.c2) / k.lambda; }};
        });
    } else {
        b.ode.note = "closed form only for integer alpha; numeric data otherwise";
        const cplx z0 = b.ode.base_point;
        b.ode.base_values = [a, z0](const Constants& k) {
            return BaseValues{std::exp(z0) / (k.c1 * principal_pow(z0, a + 1.0)), k.c2 / k.lambda};
        };
    }
}

void build_hermite(Builder& b) {
    b.ode.title = "Hermite";
    b.schema({{"n", 1.0, "index (zeroth-order coefficient is -2n)"}});
    const cplx n = b.ode.param("n");
    b.ode.p = [](cplx) { return cplx(1.0); };
    b.ode.q = [](cplx z) { return -2.0 * z; };
    b.ode.r = [n](cplx) { return -2.0 * n; };
    b.ode.base_point = 0.0;
    b.ode.default_domain = cartesian(-2.0, 2.0, -2.0, 2.0);
    b.ode.default_constants = {1.0, 0.0, std::sqrt(kPi)};
    b.ode.default_xi0 = cplx(1.0, 3.0);
    b.ode.note = "zeroth-order coefficient -2n; polynomial solutions are H_k at n = -k";
    const cplx z0 = b.ode.base_point;
    b.closed([n, z0](const Constants& k) {
        const cplx erf0 = erf_complex(z0);
        return ClosedForm{[k](cplx z) { return k.c1 * k.c1 * std::exp(z * z); },
                          [k, n, erf0](cplx z) {
                              return k.c2 / k.lambda +
                                     n * std::sqrt(kPi) / (k.lambda * k.c1 * k.c1) * (erf_complex(z) - erf0);
                          }};
    });
}

void build_gegenbauer(Builder& b) {
    b.ode.title = "Gegenbauer";
    b.schema({{"alpha", 0.5, "order"}, {"n", 1.0, "degree"}});
    const cplx a = b.ode.param("alpha");
    const cplx n = b.ode.param("n");
    const cplx d2 = n * (n + 2.0 * a);
    const cplx d3 = 2.0 * a + 1.0;
    b.ode.p = [](cplx z) { return 1.0 - z * z; };
    b.ode.q = [d3](cplx) { return -d3; };
    b.ode.r = [d2](cplx) { return d2; };
    b.ode.singularities = {-1.0, 1.0};
    b.ode.cuts = {kLeftOfMinusOne, kRightOfOne};
    b.ode.base_point = 0.0;
    b.ode.default_domain = polar(0.01, 10.0, 0.0, kTwoPi);
    b.ode.default_constants = {1.0, 0.0, 1.0};
    b.ode.default_xi0 = 0.0;
    b.ode.nonstandard_form = true;
    b.ode.note = "first-derivative coefficient -(2alpha+1) without the usual factor z";
    const cplx e = a + 0.5;
    b.closed([d2, d3, e](const Constants& k) {
        return ClosedForm{[k, e](cplx z) { return k.c1 * principal_pow((1.0 + z) / (1.0 - z), e); },
                          [k, d2, d3, e](cplx z) {
                              return (d2 * principal_pow((1.0 - z) / (1.0 + z), e) + k.c2) / (k.lambda * k.c1 * d3);
                          }};
    });
}

void build_jacobi(Builder& b) {
    b.ode.title = "Jacobi";
    b.schema({{"alpha", 1.0, "first exponent"}, {"beta", 2.0, "second exponent"}, {"n", 1.0, "degree"}});
    const cplx a = b.ode.param("alpha");
    const cplx be = b.ode.param("beta");
    const cplx n = b.ode.param("n");
    const cplx rr = n * (n + a + be + 1.0);
    b.ode.p = [](cplx z) { return 1.0 - z * z; };
    b.ode.q = [a, be](cplx z) { return be - a - (a + be + 2.0) * z; };
    b.ode.r = [rr](cplx) { return rr; };
    b.ode.singularities = {-1.0, 1.0};
    b.ode.cuts = {kLeftOfMinusOne, kRightOfOne};
    b.ode.base_point = 0.0;
    b.ode.default_domain = cartesian(-1.0 + 0.01, 0.0, 0.0, 1.0 - 0.01);
    b.ode.default_constants = {1.0, 0.0, -1.0};
    b.ode.default_xi0 = 0.0;
    const double two_abs_alpha = 2.0 * std::abs(a);
    b.ode.valid_region = [two_abs_alpha](cplx z) { return std::abs(z) < 1.0 && std::abs(z + 1.0) < two_abs_alpha; };
    b.ode.valid_region_text = "|xi| < 1 and |xi + 1| < 2|alpha|";
    // chi is anchored at z = -1 where (1+z)^(beta+1) vanishes:
    //   chi(z) = -(1/lambda) [ c2/(c1(beta+1)) + int_{-1}^{z} (r/p)/eta^2 ].
    if (be.real() > -1.0) {
        b.ode.base_values = [a, be, rr](const Constants& k) {
            auto integrand = [&](cplx t) { return rr * principal_pow(1.0 + t, be) * principal_pow(1.0 - t, a) / k.c1; };
            QuadOptions opt;
            opt.abs_tol = 1e-15;
            const std::vector<detail::Segment> seg{{-1.0, 0.0, detail::SegmentMap::SingularStart}};
            const auto res = integrate_segments<cplx>(integrand, seg, opt);
            const cplx chi0 = -(k.c2 / (k.c1 * (be + 1.0)) + res.value) / k.lambda;
            return BaseValues{k.c1, chi0};
        };
    } else {
        b.ode.note = "beta <= -1: chi seeded with c2/lambda at the base point";
    }
}

} // namespace

cplx LinearODE::param(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw Error(ErrorCode::InvalidArgument, "equation '" + id + "' has no parameter '" + name + "'");
    return it->second;
}

BaseValues LinearODE::base_values_for(const Constants& k) const {
    if (base_values) return base_values(k);
    return {k.c1, k.c2 / k.lambda};
}

Obstacles LinearODE::obstacles(double radius) const {
    Obstacles obs;
    for (cplx s : singularities) obs.discs.push_back({s, radius});
    obs.cuts = cuts;
    return obs;
}

const std::vector<std::string>& equation_ids() {
    static const std::vector<std::string> ids = {"legendre", "legendre_assoc", "bessel",  "chebyshev1", "chebyshev2",
                                                 "laguerre", "laguerre_assoc", "hermite", "gegenbauer", "jacobi"};
    return ids;
}

ODEPtr get_equation(const std::string& id, const ParamMap& params) {
    Builder b{LinearODE{}, params};
    b.ode.id = id;
    if (id == "legendre") build_legendre(b);
    else if (id == "legendre_assoc") build_legendre_assoc(b);
    else if (id == "bessel") build_bessel(b);
    else if (id == "chebyshev1") build_chebyshev(b, false);
    else if (id == "chebyshev2") build_chebyshev(b, true);
    else if (id == "laguerre") build_laguerre(b);
    else if (id == "laguerre_assoc") build_laguerre_assoc(b);
    else if (id == "hermite") build_hermite(b);
    else if (id == "gegenbauer") build_gegenbauer(b);
    else if (id == "jacobi") build_jacobi(b);
    else throw Error(ErrorCode::UnknownEquation, "unknown equation '" + id + "'");
    return std::make_shared<const LinearODE>(std::move(b.ode));
}

CoefficientRatios coefficient_ratios(const LinearODE& ode, cplx z) {
    for (cplx s : ode.singularities)
        if (std::abs(z - s) <= 1e-14 * std::max(1.0, std::abs(s))) throw SingularPoint(z);
    const cplx p = ode.p(z);
    if (p == 0.0) throw SingularPoint(z);
    const CoefficientRatios out{ode.q(z) / p, ode.r(z) / p};
    if (!is_finite(out.q_over_p) || !is_finite(out.r_over_p)) throw SingularPoint(z);
    return out;
}

} // namespace wsurf

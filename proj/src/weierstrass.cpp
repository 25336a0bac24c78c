#include "wsurf/weierstrass.hpp"

#include <cmath>
#include <limits>

#include "wsurf/path_planner.hpp"
#include "wsurf/quadrature.hpp"

namespace wsurf {

struct WeierstrassData::Impl {
    DataSource source = DataSource::Numeric;
    Constants k;
    cplx base{0.0};
    Obstacles obstacles;
    ODEPtr ode;
    ComplexFn eta, chi;
    DataValue at_base{};
    StepControl ctl;
    QuadOptions quad;
};

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

DataValue nan_value() { return {cplx(kNaN, kNaN), cplx(kNaN, kNaN), cplx(kNaN, kNaN)}; }

QuadOptions data_quad_options() {
    QuadOptions q;
    q.abs_tol = 1e-13;
    q.rel_tol = 1e-13;
    q.max_panels = 6000;
    return q;
}

} // namespace

const char* to_string(DataSource s) noexcept { return s == DataSource::ClosedForm ? "closed_form" : "numeric"; }

WeierstrassData WeierstrassData::from_functions(ComplexFn eta_sq, ComplexFn chi, const Constants& k, cplx base_point,
                                                Obstacles obstacles) {
    auto impl = std::make_shared<Impl>();
    impl->source = DataSource::ClosedForm;
    impl->k = k;
    impl->base = base_point;
    impl->obstacles = std::move(obstacles);
    impl->eta = std::move(eta_sq);
    impl->chi = std::move(chi);
    impl->quad = data_quad_options();
    WeierstrassData d;
    d.impl_ = impl;
    return d;
}

WeierstrassData WeierstrassData::numeric(ODEPtr ode, const Constants& k, const StepControl& ctl) {
    if (!ode) throw Error(ErrorCode::InvalidArgument, "numeric data needs an equation");
    if (k.c1 == 0.0) throw Error(ErrorCode::InvalidArgument, "c1 must be nonzero");
    if (k.lambda == 0.0) throw Error(ErrorCode::InvalidArgument, "lambda must be nonzero");
    auto impl = std::make_shared<Impl>();
    impl->source = DataSource::Numeric;
    impl->k = k;
    impl->base = ode->base_point;
    impl->obstacles = ode->obstacles(kDefaultExclusionRadius);
    impl->ode = ode;
    impl->ctl = ctl;
    impl->quad = data_quad_options();
    const BaseValues bv = ode->base_values_for(k);
    if (bv.eta_sq == 0.0 || !is_finite(bv.eta_sq) || !is_finite(bv.chi))
        throw Error(ErrorCode::InvalidArgument, "invalid base values for '" + ode->id + "'");
    impl->at_base = {bv.eta_sq, bv.chi, std::log(bv.eta_sq)};
    WeierstrassData d;
    d.impl_ = impl;
    return d;
}

WeierstrassData WeierstrassData::closed_form(ODEPtr ode, const Constants& k, double tol) {
    if (!ode) throw Error(ErrorCode::InvalidArgument, "closed-form data needs an equation");
    if (k.c1 == 0.0) throw Error(ErrorCode::InvalidArgument, "c1 must be nonzero");
    if (k.lambda == 0.0) throw Error(ErrorCode::InvalidArgument, "lambda must be nonzero");
    std::optional<ClosedForm> cf;
    if (ode->closed_form) cf = ode->closed_form(k);
    if (!cf) throw Error(ErrorCode::InvalidArgument, "equation '" + ode->id + "' has no closed form for these parameters");
    WeierstrassData d = from_functions(cf->eta_sq, cf->chi, k, ode->base_point, ode->obstacles(kDefaultExclusionRadius));
    auto impl = std::const_pointer_cast<Impl>(d.impl_);
    impl->ode = ode;
    if (tol > 0.0) impl->quad.abs_tol = impl->quad.rel_tol = tol;
    return d;
}

DataSource WeierstrassData::source() const { return impl_->source; }
const Constants& WeierstrassData::constants() const { return impl_->k; }
cplx WeierstrassData::base_point() const { return impl_->base; }
const Obstacles& WeierstrassData::obstacles() const { return impl_->obstacles; }
const LinearODE* WeierstrassData::ode() const { return impl_->ode.get(); }
ODEPtr WeierstrassData::ode_ptr() const { return impl_->ode; }

bool WeierstrassData::is_singular(cplx z) const {
    for (const auto& d : impl_->obstacles.discs)
        if (std::abs(z - d.center) <= 1e-12 * std::max(1.0, std::abs(d.center))) return true;
    return false;
}

DataValue WeierstrassData::advance(const DataValue& at_a, cplx a, cplx b, int fixed_steps) const {
    const Impl& m = *impl_;
    if (m.source == DataSource::ClosedForm) {
        const cplx e = m.eta(b);
        const cplx c = m.chi(b);
        if (!is_finite(e) || !is_finite(c)) throw EvaluationFailure(b);
        return {e, c, std::log(e)};
    }
    if (a == b) return at_a;
    const cplx d = b - a;
    const cplx inv_lambda = 1.0 / m.k.lambda;
    const LinearODE& ode = *m.ode;
    auto f = [&](double t, const CState<2>& y) {
        const auto cr = coefficient_ratios(ode, a + t * d);
        return CState<2>{-cr.q_over_p * d, -inv_lambda * cr.r_over_p * std::exp(-y[0]) * d};
    };
    const CState<2> y0{at_a.log_eta_sq, at_a.chi};
    const auto y = fixed_steps > 0 ? integrate_fixed(kDormandPrince54, f, y0, fixed_steps)
                                   : integrate_unit(kDormandPrince54, f, y0, m.ctl);
    const DataValue out{std::exp(y[0]), y[1], y[0]};
    if (!is_finite(out.eta_sq) || !is_finite(out.chi)) throw EvaluationFailure(b);
    return out;
}

DataValue WeierstrassData::advance_toward(const DataValue& at_a, cplx a, cplx s, cplx b) const {
    const Impl& m = *impl_;
    if (m.source == DataSource::ClosedForm || a == b) return advance(at_a, a, b);
    const double tau_end = std::log(std::abs(a - s) / std::abs(b - s));
    if (!(tau_end > 0.0)) return advance(at_a, a, b);
    const cplx inv_lambda = 1.0 / m.k.lambda;
    const LinearODE& ode = *m.ode;
    // xi(t) = s + (a - s) exp(-t tau_end)
    auto f = [&](double t, const CState<2>& y) {
        const cplx off = (a - s) * std::exp(-t * tau_end);
        const cplx dxi = -off * tau_end;
        const auto cr = coefficient_ratios(ode, s + off);
        return CState<2>{-cr.q_over_p * dxi, -inv_lambda * cr.r_over_p * std::exp(-y[0]) * dxi};
    };
    const auto y = integrate_unit(kDormandPrince54, f, CState<2>{at_a.log_eta_sq, at_a.chi}, m.ctl);
    const DataValue out{std::exp(y[0]), y[1], y[0]};
    if (!is_finite(out.eta_sq) || !is_finite(out.chi)) throw EvaluationFailure(b);
    return out;
}

DataValue WeierstrassData::value(cplx z) const {
    const Impl& m = *impl_;
    if (!is_finite(z)) throw EvaluationFailure(z);
    if (is_singular(z)) throw SingularPoint(z);
    if (m.source == DataSource::ClosedForm) return advance({}, z, z);
    if (z == m.base) return m.at_base;

    // Points inside an exclusion disc are reached radially from its rim.
    cplx target = z;
    for (const auto& d : m.obstacles.discs) {
        const double r = std::abs(z - d.center);
        if (r < d.radius) target = d.center + (z - d.center) * (d.radius * (1.0 + 1e-9) / r);
    }
    DataValue cur = m.at_base;
    if (target != m.base) {
        const ContourPath path = plan_path(m.base, target, m.obstacles);
        const auto& w = path.waypoints();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) cur = advance(cur, w[i], w[i + 1]);
    }
    if (target != z) cur = advance(cur, target, z);
    return cur;
}

ComplexFn WeierstrassData::eta_sq_fn() const {
    return [d = *this](cplx z) { return d.eta_sq(z); };
}

ComplexFn WeierstrassData::chi_fn() const {
    return [d = *this](cplx z) { return d.chi(z); };
}

LocalChart WeierstrassData::chart(cplx center) const { return LocalChart(*this, center, value(center)); }

LocalChart WeierstrassData::chart(cplx center, const DataValue& at_center) const {
    return LocalChart(*this, center, at_center);
}

TrackedIntegrals WeierstrassData::integrate_segment(const DataValue& at_a, cplx a, cplx b, int fixed_steps) const {
    const Impl& m = *impl_;
    TrackedIntegrals out;
    if (a == b) {
        out.end = at_a;
        return out;
    }
    if (m.source == DataSource::ClosedForm) {
        auto integrand = [&](cplx xi) {
            const cplx e = m.eta(xi);
            const cplx c = m.chi(xi);
            return std::array<cplx, 3>{e, c * e, c * c * e};
        };
        if (fixed_steps > 0) {
            // One Kronrod panel per step; smooth in b.
            std::array<cplx, 3> sum{};
            const detail::Segment seg{a, b, detail::SegmentMap::Linear};
            for (int s = 0; s < fixed_steps; ++s)
                sum += detail::evaluate_panel<std::array<cplx, 3>>(integrand, seg, 0, double(s) / fixed_steps,
                                                                   double(s + 1) / fixed_steps, 0)
                           .value;
            out.integrals = {sum[0], sum[1], sum[2]};
        } else {
            const auto r = integrate_line<std::array<cplx, 3>>(integrand, a, b, m.quad);
            if (!r.converged) throw ToleranceNotReached(r.value[0], r.error);
            out.integrals = {r.value[0], r.value[1], r.value[2]};
        }
        out.end = advance(at_a, a, b);
        return out;
    }
    const cplx d = b - a;
    const cplx inv_lambda = 1.0 / m.k.lambda;
    const LinearODE& ode = *m.ode;
    auto f = [&](double t, const CState<5>& y) {
        const auto cr = coefficient_ratios(ode, a + t * d);
        const cplx e = std::exp(y[0]);
        const cplx ed = e * d;
        return CState<5>{-cr.q_over_p * d, -inv_lambda * cr.r_over_p * d / e, ed, y[1] * ed, y[1] * y[1] * ed};
    };
    const CState<5> y0{at_a.log_eta_sq, at_a.chi, 0.0, 0.0, 0.0};
    const auto y = fixed_steps > 0 ? integrate_fixed(kDormandPrince54, f, y0, fixed_steps)
                                   : integrate_unit(kDormandPrince54, f, y0, m.ctl);
    out.integrals = {y[2], y[3], y[4]};
    out.end = {std::exp(y[0]), y[1], y[0]};
    if (!is_finite(out.end.eta_sq) || !is_finite(y[2]) || !is_finite(y[3]) || !is_finite(y[4]))
        throw EvaluationFailure(b);
    return out;
}

namespace {

// Integral from the singular centre s to the regular point r (oriented s -> r).
PathIntegrals singular_segment(const WeierstrassData& data, cplx s, cplx r, const DataValue& at_r, const QuadOptions& opt) {
    const double floor = 1e-12 * std::abs(r - s);
    auto integrand = [&](cplx xi) {
        // Nodes this close to s carry no weight after the endpoint map; keep
        // them off the singular point itself.
        if (std::abs(xi - s) < floor) xi = s + (r - s) * (floor / std::abs(r - s));
        const DataValue v = data.advance_toward(at_r, r, s, xi);
        return std::array<cplx, 3>{v.eta_sq, v.chi * v.eta_sq, v.chi * v.chi * v.eta_sq};
    };
    const std::vector<detail::Segment> seg{{s, r, detail::SegmentMap::SingularStart}};
    const auto res = integrate_segments<std::array<cplx, 3>>(integrand, seg, opt);
    if (!res.converged) throw ToleranceNotReached(res.value[0], res.error);
    return {res.value[0], res.value[1], res.value[2]};
}

} // namespace

TrackedIntegrals WeierstrassData::integrate_path(const ContourPath& path) const {
    const cplx start = path.start();
    if (is_singular(start)) return integrate_path(path, nan_value());
    return integrate_path(path, value(start));
}

TrackedIntegrals WeierstrassData::integrate_path(const ContourPath& path, const DataValue& at_start) const {
    std::vector<cplx> w;
    for (cplx p : path.waypoints()) {
        if (!w.empty() && is_singular(w.back()) && is_singular(p)) w.push_back(0.5 * (w.back() + p));
        w.push_back(p);
    }
    TrackedIntegrals out;
    out.end = at_start;
    std::size_t i = 0;
    if (is_singular(w[0])) {
        const DataValue at_r = value(w[1]);
        out.integrals += singular_segment(*this, w[0], w[1], at_r, impl_->quad);
        out.end = at_r;
        i = 1;
    }
    for (; i + 1 < w.size(); ++i) {
        const cplx a = w[i], b = w[i + 1];
        if (is_singular(b)) {
            PathIntegrals back = singular_segment(*this, b, a, out.end, impl_->quad);
            out.integrals += PathIntegrals{} - back;
            out.end = nan_value();
            if (i + 2 < w.size()) throw Error(ErrorCode::PathPlanningFailure, "path continues through a singular point");
            break;
        }
        const TrackedIntegrals seg = integrate_segment(out.end, a, b);
        out.integrals += seg.integrals;
        out.end = seg.end;
    }
    return out;
}

WeierstrassData build_weierstrass(ODEPtr ode, const Constants& k, DataSource source, double tol) {
    if (source == DataSource::ClosedForm) return WeierstrassData::closed_form(ode, k, tol);
    StepControl ctl;
    if (tol > 0.0) {
        ctl.rel_tol = tol;
        ctl.abs_tol = 1e-2 * tol;
    }
    WeierstrassData d = WeierstrassData::numeric(ode, k, ctl);
    if (tol > 0.0) {
        auto impl = std::const_pointer_cast<WeierstrassData::Impl>(d.impl_);
        impl->quad.abs_tol = impl->quad.rel_tol = tol;
    }
    return d;
}

ComplexFn build_eta(ODEPtr ode, const Constants& k, DataSource source) {
    return build_weierstrass(std::move(ode), k, source).eta_sq_fn();
}

ComplexFn build_chi(ODEPtr ode, const Constants& k, DataSource source) {
    return build_weierstrass(std::move(ode), k, source).chi_fn();
}

WeierstrassReport verify_weierstrass(const WeierstrassData& data, const LinearODE& ode, const std::vector<cplx>& samples) {
    WeierstrassReport rep;
    const cplx lambda = data.constants().lambda;
    for (cplx z : samples) {
        const LocalChart chart = data.chart(z);
        const auto cr = coefficient_ratios(ode, z);
        const auto de = holo_derivative(chart.eta_sq_fn(), z, 1);
        const auto dc = holo_derivative(chart.chi_fn(), z, 1);
        const cplx e = chart.at_center().eta_sq;
        const double re = std::abs(cr.q_over_p + de.value / e);
        const double rc = std::abs(cr.r_over_p + lambda * e * dc.value);
        if (re > rep.eta_residual || rep.samples == 0) {
            rep.eta_residual = std::max(rep.eta_residual, re);
            rep.worst_eta_point = z;
        }
        if (rc > rep.chi_residual || rep.samples == 0) {
            rep.chi_residual = std::max(rep.chi_residual, rc);
            rep.worst_chi_point = z;
        }
        rep.eta_holomorphy = std::max(rep.eta_holomorphy, de.cr_residual);
        rep.chi_holomorphy = std::max(rep.chi_holomorphy, dc.cr_residual);
        ++rep.samples;
    }
    return rep;
}

} // namespace wsurf

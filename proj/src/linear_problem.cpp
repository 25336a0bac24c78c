#include "wsurf/linear_problem.hpp"

#include <limits>

#include "wsurf/path_planner.hpp"

namespace wsurf {

Matrix2C potential_matrix(cplx lambda, const DataValue& v) {
    const cplx s = lambda * v.eta_sq;
    const cplx c = v.chi;
    return {s * c, -s, s * c * c, -(s * c)};
}

Matrix2C potential_matrix(const WeierstrassData& data, cplx z) {
    return potential_matrix(data.constants().lambda, data.value(z));
}

Wavefunction::Wavefunction(WeierstrassData data, ODEPtr ode, std::vector<WavefunctionState> samples, StepControl ctl)
    : data_(std::move(data)), ode_(std::move(ode)), samples_(std::move(samples)), ctl_(ctl) {
    if (samples_.empty()) throw Error(ErrorCode::InvalidArgument, "wavefunction needs at least one sample");
}

WavefunctionState Wavefunction::advance(const WavefunctionState& from, cplx w, int fixed_steps) const {
    if (w == from.z) return from;
    const cplx a = from.z;
    const cplx d = w - a;
    const LinearODE& ode = *ode_;
    const cplx inv_lambda = 1.0 / from.lambda;
    const bool closed = data_.source() == DataSource::ClosedForm;
    // State: psi1, psi1', log eta^2, chi (the last two only for numeric data).
    auto f = [&](double t, const CState<4>& y) {
        const auto cr = coefficient_ratios(ode, a + t * d);
        CState<4> out{y[1] * d, -(cr.q_over_p * y[1] + cr.r_over_p * y[0]) * d, 0.0, 0.0};
        if (!closed) {
            out[2] = -cr.q_over_p * d;
            out[3] = -inv_lambda * cr.r_over_p * std::exp(-y[2]) * d;
        }
        return out;
    };
    const CState<4> y0{from.psi1, from.dpsi1, from.data.log_eta_sq, from.data.chi};
    const auto y = fixed_steps > 0 ? integrate_fixed(kFehlberg45, f, y0, fixed_steps) : integrate_unit(kFehlberg45, f, y0, ctl_);
    WavefunctionState out{w, y[0], y[1], {}, from.lambda};
    out.data = closed ? data_.advance(from.data, a, w, fixed_steps) : DataValue{std::exp(y[2]), y[3], y[2]};
    if (!is_finite(out.psi1) || !is_finite(out.dpsi1)) throw EvaluationFailure(w);
    return out;
}

WavefunctionState Wavefunction::at(cplx w) const {
    const Obstacles& obs = data_.obstacles();
    const WavefunctionState* best = nullptr;
    double best_dist = std::numeric_limits<double>::infinity();
    for (const auto& s : samples_) {
        const double dist = std::abs(s.z - w);
        if (dist < best_dist && segment_admissible(s.z, w, obs)) {
            best = &s;
            best_dist = dist;
        }
    }
    if (best) return advance(*best, w);
    const ContourPath path = plan_path(samples_.front().z, w, obs);
    WavefunctionState cur = samples_.front();
    const auto& wp = path.waypoints();
    for (std::size_t i = 1; i < wp.size(); ++i) cur = advance(cur, wp[i]);
    return cur;
}

std::function<Vec2C(cplx)> Wavefunction::local(const WavefunctionState& center) const {
    return [self = *this, center](cplx w) { return self.advance(center, w, LocalChart::kHopSteps).psi(); };
}

Wavefunction integrate_wavefunction(const WeierstrassData& data, ODEPtr ode, WavefunctionInit init, const ContourPath& path,
                                    int samples_per_segment, StepControl ctl) {
    if (!ode) throw Error(ErrorCode::InvalidArgument, "wavefunction needs an equation");
    if (!is_finite(init.psi1) || !is_finite(init.dpsi1)) throw Error(ErrorCode::InvalidArgument, "non-finite initial data");
    const auto& wp = path.waypoints();
    if (wp.size() < 2) throw Error(ErrorCode::PathPlanningFailure, "path needs two waypoints");
    for (cplx p : wp)
        if (data.is_singular(p)) throw SingularPoint(p);
    samples_per_segment = std::max(samples_per_segment, 1);

    const cplx lambda = data.constants().lambda;
    std::vector<WavefunctionState> samples{{wp[0], init.psi1, init.dpsi1, data.value(wp[0]), lambda}};
    Wavefunction wf(data, ode, samples, ctl);
    for (std::size_t i = 0; i + 1 < wp.size(); ++i) {
        for (int k = 1; k <= samples_per_segment; ++k) {
            const cplx w = k == samples_per_segment ? wp[i + 1] : wp[i] + (double(k) / samples_per_segment) * (wp[i + 1] - wp[i]);
            samples.push_back(wf.advance(samples.back(), w));
        }
    }
    return Wavefunction(data, std::move(ode), std::move(samples), ctl);
}

namespace {

HoloDerivative derivative(const ComplexFn& f, cplx z, double h) {
    return h > 0.0 ? holo_derivative_step(f, z, 1, h) : holo_derivative(f, z, 1);
}

LPResidual residual_with(const Matrix2C& u, const std::function<Vec2C(cplx)>& psi, cplx z, double h) {
    const Vec2C p = psi(z);
    Vec2C dpsi{}, dbar{};
    for (int k = 0; k < 2; ++k) {
        const auto d = derivative([&](cplx w) { return psi(w)[k]; }, z, h);
        dpsi[k] = d.value;
        dbar[k] = d.cr_residual;
    }
    const Vec2C up = u * p;
    const Vec2C diff{dpsi[0] - up[0], dpsi[1] - up[1]};
    return {norm(diff) / std::max(1.0, norm(p)), norm(dbar)};
}

} // namespace

LPResidual lp_residual(const WeierstrassData& data, const std::function<Vec2C(cplx)>& psi, cplx z, double h) {
    return residual_with(potential_matrix(data, z), psi, z, h);
}

LPResidual lp_residual(const WeierstrassData& data, const Wavefunction& wf, cplx z, double h) {
    const WavefunctionState c = wf.at(z);
    return residual_with(potential_matrix(data.constants().lambda, c.data), wf.local(c), z, h);
}

double zcc_residual(const std::function<Matrix2C(cplx)>& u, cplx z, double h) {
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
        auto entry = [&](cplx w) {
            const Matrix2C m = u(w);
            return k == 0 ? m.a11 : k == 1 ? m.a12 : k == 2 ? m.a21 : m.a22;
        };
        const double r = derivative(entry, z, h).cr_residual;
        sum += r * r;
    }
    return std::sqrt(sum);
}

double zcc_residual(const WeierstrassData& data, cplx z, double h) {
    const LocalChart chart = data.chart(z);
    const cplx lambda = data.constants().lambda;
    return zcc_residual([&](cplx w) { return potential_matrix(lambda, chart.value(w)); }, z, h);
}

} // namespace wsurf

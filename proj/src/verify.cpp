#include "wsurf/verify.hpp"

#include <random>

#include "wsurf/linear_problem.hpp"
#include "wsurf/path_planner.hpp"

namespace wsurf {

namespace {

double distance_to_ray(cplx p, const CutRay& cut) {
    const double t = std::max(0.0, (std::conj(cut.direction) * (p - cut.anchor)).real());
    return std::abs(p - (cut.anchor + t * cut.direction));
}

struct Worst {
    ResidualEntry e;
    void add(double v, cplx z) {
        ++e.samples;
        if (!(v <= e.value)) { // NaN counts as worst
            e.value = v;
            e.worst_point = z;
        }
    }
};

} // namespace

std::vector<cplx> verification_points(const LinearODE& ode, int count, std::uint64_t seed, double clearance) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ua(ode.default_domain.a0, ode.default_domain.a1);
    std::uniform_real_distribution<double> ub(ode.default_domain.b0, ode.default_domain.b1);
    std::vector<cplx> pts;
    for (int attempt = 0; int(pts.size()) < count && attempt < 1000 * count; ++attempt) {
        const double a = ua(rng), b = ub(rng);
        const cplx z = ode.default_domain.kind == DomainSpec::Kind::Polar ? std::polar(a, b) : cplx(a, b);
        bool ok = ode.in_valid_region(z);
        for (cplx s : ode.singularities) ok = ok && std::abs(z - s) >= clearance;
        for (const auto& c : ode.cuts) ok = ok && distance_to_ray(z, c) >= 0.01;
        if (ok) pts.push_back(z);
    }
    return pts;
}

std::vector<ResidualEntry> run_verify_suite(const WeierstrassData& data, cplx xi0, const VerifyOptions& opt) {
    const LinearODE* ode = data.ode();
    if (!ode) throw Error(ErrorCode::InvalidArgument, "the residual suite needs data built from an equation");
    const std::vector<cplx> pts = verification_points(*ode, opt.samples, opt.seed, opt.clearance);
    if (pts.empty()) throw Error(ErrorCode::DomainError, "no admissible sample points in the default domain");
    const cplx lambda = data.constants().lambda;

    Worst eta{{"eta_identity_rel", 0.0, 1e-7}}, chi{{"chi_identity_rel", 0.0, 1e-7}};
    Worst holo{{"data_dbar_rel", 0.0, 1e-7}}, zcc{{"zero_curvature_rel", 0.0, 1e-7}};
    Worst lp{{"linear_problem", 0.0, 1e-6}}, lpd{{"linear_problem_dbar_rel", 0.0, 1e-7}};
    Worst conf{{"conformality_rel", 0.0, 1e-5}}, metric{{"metric_rel", 0.0, 1e-5}};
    Worst mean{{"mean_curvature", 0.0, 1e-4}}, hopf{{"hopf_vs_data_rel", 0.0, 1e-6}};
    Worst hopf_dbar{{"hopf_dbar_rel", 0.0, 1e-6}}, liouville{{"liouville_rel", 0.0, 1e-3}};
    Worst st{{"sym_tafel_square", 0.0, 1e-12}}, quat{{"quaternionic_identity", 0.0, 1e-9}};
    Worst paths{{"path_independence_rel", 0.0, 1e-8}};

    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const cplx z = pts[k];
        const LocalChart chart = data.chart(z);
        const DataValue v = chart.at_center();
        const auto cr = coefficient_ratios(*ode, z);
        const auto de = holo_derivative(chart.eta_sq_fn(), z, 1);
        const auto dc = holo_derivative(chart.chi_fn(), z, 1);
        eta.add(std::abs(cr.q_over_p + de.value / v.eta_sq) / std::max(1.0, std::abs(cr.q_over_p)), z);
        chi.add(std::abs(cr.r_over_p + lambda * v.eta_sq * dc.value) / std::max(1.0, std::abs(cr.r_over_p)), z);
        holo.add(std::max(de.cr_residual / std::max(1.0, std::abs(v.eta_sq)), dc.cr_residual / std::max(1.0, std::abs(v.chi))), z);
        zcc.add(zcc_residual(data, z) / std::max(1.0, potential_matrix(lambda, v).norm()), z);

        // Wavefunction seeded with (1, 0) at the base point.
        const cplx base = data.base_point();
        if (!data.is_singular(base) && base != z) {
            const Wavefunction wf =
                integrate_wavefunction(data, data.ode_ptr(), {1.0, 0.0}, plan_path(base, z, data.obstacles()));
            const WavefunctionState at = wf.at(z);
            const LPResidual r = lp_residual(data, wf, z);
            lp.add(r.residual, z);
            lpd.add(r.dbar / std::max(1.0, norm(at.psi())), z);
        }

        const GeometryReport g = geometry_report(chart, data);
        const double eu = std::exp(g.u_data);
        conf.add(g.conformality / eu, z);
        metric.add(g.metric / eu, z);
        mean.add(std::abs(g.H), z);
        hopf.add(g.hopf, z);
        hopf_dbar.add(g.hopf_holomorphy, z);
        liouville.add(g.liouville, z);

        const Matrix2C fst = sym_tafel(v.chi);
        st.add((fst * fst + Matrix2C::identity()).norm(), z);

        const TrackedIntegrals direct = data.integrate_path(plan_path(xi0, z, data.obstacles()));
        const Point3 f = immersion_from_integrals(direct.integrals);
        quat.add((quaternionic_from_integrals(direct.integrals) - pauli_embedding(f)).norm(), z);

        // A second path through another admissible point; every admissible
        // path is homotopic because each singularity carries a cut to infinity.
        const cplx m = pts[(k + 1 + rng() % (pts.size() > 1 ? pts.size() - 1 : 1)) % pts.size()];
        if (m != z && m != xi0) {
            PathIntegrals two = data.integrate_path(plan_path(xi0, m, data.obstacles())).integrals;
            two += data.integrate_path(plan_path(m, z, data.obstacles())).integrals;
            const Point3 f2 = immersion_from_integrals(two);
            const double scale = std::max({1.0, std::abs(f[0]), std::abs(f[1]), std::abs(f[2])});
            paths.add(std::max({std::abs(f[0] - f2[0]), std::abs(f[1] - f2[1]), std::abs(f[2] - f2[2])}) / scale, z);
        }
    }
    return {eta.e, chi.e, holo.e, zcc.e, lp.e, lpd.e, conf.e, metric.e, mean.e, hopf.e, hopf_dbar.e, liouville.e, st.e, quat.e, paths.e};
}

} // namespace wsurf

#pragma once

#include <functional>
#include <vector>

#include "wsurf/matrix2.hpp"
#include "wsurf/weierstrass.hpp"

namespace wsurf {

/// U = lambda eta^2 [[chi, -1], [chi^2, -chi]]; traceless and nilpotent.
Matrix2C potential_matrix(cplx lambda, const DataValue& v);
/// Throws SingularPoint at declared singularities.
Matrix2C potential_matrix(const WeierstrassData& data, cplx z);

struct WavefunctionState {
    cplx z;
    cplx psi1, dpsi1;
    DataValue data;
    cplx lambda;

    /// psi2 = chi psi1 - d psi1 / (lambda eta^2)
    cplx psi2() const { return data.chi * psi1 - dpsi1 / (lambda * data.eta_sq); }
    Vec2C psi() const { return {psi1, psi2()}; }
};

/// Solution of p w'' + q w' + r w = 0 carried along a contour together with the
/// Weierstrass data, so that Psi = (psi1, psi2) solves d Psi = U Psi.
class Wavefunction {
public:
    Wavefunction(WeierstrassData data, ODEPtr ode, std::vector<WavefunctionState> samples, StepControl ctl);

    const std::vector<WavefunctionState>& samples() const { return samples_; }
    const WeierstrassData& data() const { return data_; }

    /// Continues the solution from `from` to w along the straight segment.
    /// `fixed_steps` > 0 uses that many non-adaptive steps.
    WavefunctionState advance(const WavefunctionState& from, cplx w, int fixed_steps = 0) const;
    /// State at w, continued from the nearest sample with a clear line of sight
    /// (or along a planned path from the first sample).
    WavefunctionState at(cplx w) const;

    /// psi_k near `center`, each point reached by a short hop from the centre.
    std::function<Vec2C(cplx)> local(const WavefunctionState& center) const;

private:
    WeierstrassData data_;
    ODEPtr ode_;
    std::vector<WavefunctionState> samples_;
    StepControl ctl_;
};

struct WavefunctionInit {
    cplx psi1{0.0};
    cplx dpsi1{0.0};
};

/// Integrates psi1'' = -(q/p) psi1' - (r/p) psi1 along the path with an
/// embedded Runge-Kutta-Fehlberg 4(5) pair (relative tolerance 1e-10 by
/// default). Each segment is sampled at `samples_per_segment` interior points.
Wavefunction integrate_wavefunction(const WeierstrassData& data, ODEPtr ode, WavefunctionInit init, const ContourPath& path,
                                    int samples_per_segment = 8, StepControl ctl = {1e-10, 1e-14, 1e-13, 200000});

struct LPResidual {
    double residual; ///< |d Psi - U Psi| / max(1, |Psi|)
    double dbar;     ///< |dbar Psi|
};

/// `h` <= 0 selects the default holomorphic-derivative step.
LPResidual lp_residual(const WeierstrassData& data, const Wavefunction& wf, cplx z, double h = 0.0);
LPResidual lp_residual(const WeierstrassData& data, const std::function<Vec2C(cplx)>& psi, cplx z, double h = 0.0);

/// |dbar U| with the holomorphic gauge V = 0.
double zcc_residual(const WeierstrassData& data, cplx z, double h = 0.0);
double zcc_residual(const std::function<Matrix2C(cplx)>& u, cplx z, double h = 0.0);

} // namespace wsurf

#include "specnoise/model.hpp"

#include <cmath>

#include "specnoise/fft.hpp"
#include "specnoise/grid.hpp"

namespace specnoise {

double ModelParams::q_well() const {
    return std::sqrt(8.0 * E_b / (m * omega0 * omega0));
}

void ModelParams::validate() const {
    if (!(m > 0)) throw ConfigError("ModelParams: m must be > 0");
    if (!(omega0 > 0)) throw ConfigError("ModelParams: omega0 must be > 0");
    if (!(Omega > 0)) throw ConfigError("ModelParams: Omega must be > 0");
    if (!(E_b > 0)) throw ConfigError("ModelParams: E_b must be > 0");
    if (!(S >= 0)) throw ConfigError("ModelParams: S must be >= 0");
    if (!(hbar_eff > 0)) throw ConfigError("ModelParams: hbar_eff must be > 0");
    if (!std::isfinite(period()))
        throw ConfigError("ModelParams: period 2 pi / Omega not finite");
}

double potential(double q, double t, const ModelParams& p) {
    const double w2 = p.omega0 * p.omega0;
    const double drive = p.S * q * std::cos(p.Omega * t + p.phi);
    if (p.harmonic_only) return 0.5 * p.m * w2 * q * q + drive;
    const double q2 = q * q;
    return -0.25 * p.m * w2 * q2 +
           p.m * p.m * w2 * w2 * q2 * q2 / (64.0 * p.E_b) + drive;
}

double force(double q, double t, const ModelParams& p) {
    const double w2 = p.omega0 * p.omega0;
    const double drive = p.S * std::cos(p.Omega * t + p.phi);
    if (p.harmonic_only) return -p.m * w2 * q - drive;
    return 0.5 * p.m * w2 * q -
           p.m * p.m * w2 * w2 * q * q * q / (16.0 * p.E_b) - drive;
}

MatC static_hamiltonian(const ModelParams& p, const Grid& grid) {
    p.validate();
    const int n = grid.n_points;
    if (n < 2) throw ConfigError("static_hamiltonian: grid too small");

    // Kinetic term F^H diag(p^2/2m) F built column-by-column with FFTs.
    MatC h = MatC::Zero(n, n);
    FftPlan1d fwd(n, -1), bwd(n, +1);
    VecD kin(n);
    for (int k = 0; k < n; ++k) kin[k] = grid.p(k) * grid.p(k) / (2.0 * p.m);

    VecC col(n);
    for (int j = 0; j < n; ++j) {
        col.setZero();
        col[j] = 1.0;
        fwd.execute(col.data());
        for (int k = 0; k < n; ++k) col[k] *= kin[k];
        bwd.execute(col.data());
        h.col(j) = col / static_cast<double>(n);
    }
    for (int i = 0; i < n; ++i)
        h(i, i) += potential(grid.q(i), 0.0, ModelParams{p.m, p.omega0, p.Omega,
                                                         p.E_b, 0.0, p.phi,
                                                         p.hbar_eff,
                                                         p.harmonic_only});
    // Exact hermitization removes the FFT round-off asymmetry.
    h = 0.5 * (h + h.adjoint()).eval();
    return h;
}

}  // namespace specnoise

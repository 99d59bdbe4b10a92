#include "specnoise/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specnoise/fft.hpp"
#include "specnoise/linalg.hpp"

namespace specnoise {

namespace {

VecC phase_vector(const VecD& arg) {
    VecC out(arg.size());
    for (Eigen::Index i = 0; i < arg.size(); ++i)
        out[i] = Complex(std::cos(arg[i]), std::sin(arg[i]));
    return out;
}

void scale_rows(MatC& m, const VecC& d) {
    const int n = static_cast<int>(m.rows());
    Complex* data = m.data();
    const Complex* dd = d.data();
    for (int j = 0; j < static_cast<int>(m.cols()); ++j) {
        Complex* col = data + static_cast<std::ptrdiff_t>(j) * n;
        for (int i = 0; i < n; ++i) col[i] *= dd[i];
    }
}

}  // namespace

UnitaryPropagator propagate_period(const ModelParams& p, const Grid& grid,
                                   int slices) {
    p.validate();
    if (slices < 256)
        throw ConfigError("propagate_period: slices must be >= 256");
    const int n = grid.n_points;
    const double T = p.period();
    const double dt = T / slices;
    const double hbar = p.hbar_eff;

    // Kinetic phase in momentum representation; the 1/n from the unnormalized
    // transform pair is folded in here.
    VecD kin_arg(n);
    for (int k = 0; k < n; ++k)
        kin_arg[k] = -grid.p(k) * grid.p(k) * dt / (2.0 * p.m * hbar);
    VecC kin_phase = phase_vector(kin_arg) / static_cast<double>(n);

    VecD q(n), vq(n);
    for (int i = 0; i < n; ++i) q[i] = grid.q(i);

    auto v_arg = [&](double t, double scale) {
        for (int i = 0; i < n; ++i)
            vq[i] = -potential(q[i], t, p) * dt * scale / hbar;
        return phase_vector(vq);
    };
    auto t_mid = [&](int j) { return (j + 0.5) * dt; };

    MatC u = MatC::Identity(n, n);
    FftPlanColumns fwd(u.data(), n, n, -1);
    FftPlanColumns bwd(u.data(), n, n, +1);

    scale_rows(u, v_arg(t_mid(0), 0.5));
    for (int j = 0; j < slices; ++j) {
        fwd.execute();
        scale_rows(u, kin_phase);
        bwd.execute();
        if (j + 1 < slices) {
            // merged trailing/leading half-potential steps
            for (int i = 0; i < n; ++i)
                vq[i] = -(potential(q[i], t_mid(j), p) +
                          potential(q[i], t_mid(j + 1), p)) *
                        dt * 0.5 / hbar;
            scale_rows(u, phase_vector(vq));
        } else {
            scale_rows(u, v_arg(t_mid(j), 0.5));
        }
    }

    UnitaryPropagator out{std::move(u), T, slices, grid};
    const double defect = unitarity_defect(out.matrix);
    if (defect > 1e-10)
        throw NumericError("propagate_period: unitarity defect " +
                           std::to_string(defect) +
                           " exceeds 1e-10 (grid or slices inadequate)");
    return out;
}

double unitarity_defect(const MatC& u) {
    MatC g = u.adjoint() * u;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff();
}

FloquetModes quasienergies(const UnitaryPropagator& u, const ModelParams& p) {
    const double T = u.period;
    const double hbar = p.hbar_eff;
    const double zone = hbar * p.Omega;

    ComplexEig eig = eig_general(u.matrix, true);
    const int n = static_cast<int>(eig.values.size());
    for (int i = 0; i < n; ++i) {
        const double dev = std::abs(std::abs(eig.values[i]) - 1.0);
        if (dev > 1e-8)
            throw NumericError("quasienergies: eigenvalue off the unit circle");
    }

    std::vector<double> e(n);
    for (int i = 0; i < n; ++i) {
        double en = -(hbar / T) * std::arg(eig.values[i]);
        if (en <= -0.5 * zone) en += zone;  // branch cut: lambda = -1 -> +zone/2
        e[i] = en;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return e[a] < e[b]; });

    FloquetModes modes;
    modes.spectrum.energies.resize(n);
    modes.lambda.resize(n);
    modes.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) {
        modes.spectrum.energies[i] = e[order[i]];
        modes.lambda[i] = eig.values[order[i]];
        modes.vectors.col(i) = eig.vectors.col(order[i]);
    }
    modes.spectrum.D_H = n;
    modes.spectrum.Omega = p.Omega;
    modes.spectrum.heisenberg_time = n * T;
    return modes;
}

std::vector<int> bound_state_indices(const UnitaryPropagator& u,
                                     const FloquetModes& modes,
                                     double edge_fraction, double threshold) {
    if (!(edge_fraction > 0.0 && edge_fraction < 0.5))
        throw ConfigError("bound_state_indices: edge_fraction outside (0, 0.5)");
    const int n = u.grid.n_points;
    const int edge = static_cast<int>(std::floor(edge_fraction * n));
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(modes.lambda.size()); ++i) {
        const auto& v = modes.vectors.col(i);
        double w = 0.0;
        for (int j = 0; j < edge; ++j) w += std::norm(v[j]);
        for (int j = n - edge; j < n; ++j) w += std::norm(v[j]);
        w /= v.squaredNorm();
        if (w < threshold) keep.push_back(i);
    }
    return keep;
}

QuasiSpectrum select_bound_states(const UnitaryPropagator& u,
                                  const FloquetModes& modes,
                                  double edge_fraction, double threshold) {
    std::vector<int> keep =
        bound_state_indices(u, modes, edge_fraction, threshold);
    if (static_cast<int>(keep.size()) < 64)
        throw NumericError("select_bound_states: only " +
                           std::to_string(keep.size()) +
                           " states retained (< 64); enlarge the grid");
    QuasiSpectrum out;
    out.energies.reserve(keep.size());
    for (int i : keep) out.energies.push_back(modes.spectrum.energies[i]);
    out.D_H = static_cast<int>(keep.size());
    out.Omega = modes.spectrum.Omega;
    out.heisenberg_time = out.D_H * u.period;
    return out;
}

}  // namespace specnoise

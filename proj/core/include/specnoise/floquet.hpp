#pragma once

#include <vector>

#include "specnoise/common.hpp"
#include "specnoise/grid.hpp"
#include "specnoise/model.hpp"

namespace specnoise {

/// One-period Floquet operator U(T) on the position grid.
struct UnitaryPropagator {
    MatC matrix;
    double period = 0.0;
    int slices = 0;
    Grid grid;
};

/// Quasienergies in the first Brillouin zone (-hbar Omega/2, hbar Omega/2],
/// sorted ascending. D_H is the number of retained levels.
struct QuasiSpectrum {
    std::vector<double> energies;
    int D_H = 0;
    double Omega = 0.0;
    double heisenberg_time = 0.0;  // D_H * T
};

/// Full eigensolution of U: lambda/vectors/energies share one ordering
/// (energies ascending).
struct FloquetModes {
    QuasiSpectrum spectrum;
    VecC lambda;
    MatC vectors;
};

/// Symmetric split-operator propagation over one period with `slices`
/// midpoint time steps; kinetic factor applied in momentum representation.
/// Throws NumericError if the result is not unitary to 1e-10.
UnitaryPropagator propagate_period(const ModelParams& p, const Grid& grid,
                                   int slices);

/// E_n = -(hbar/T) arg(lambda_n), folded into (-hbar Omega/2, hbar Omega/2].
FloquetModes quasienergies(const UnitaryPropagator& u, const ModelParams& p);

/// max_ij |(U^H U - I)_ij|
double unitarity_defect(const MatC& u);

/// Retains quasienergies whose Floquet state carries probability below
/// `threshold` in the outer `edge_fraction` of the grid on each side.
/// Throws NumericError when fewer than 64 states survive.
QuasiSpectrum select_bound_states(const UnitaryPropagator& u,
                                  const FloquetModes& modes,
                                  double edge_fraction = 0.1,
                                  double threshold = 1e-6);

/// Indices (into modes ordering) of the retained states; exposed for
/// diagnostics and phase-space cross-checks.
std::vector<int> bound_state_indices(const UnitaryPropagator& u,
                                     const FloquetModes& modes,
                                     double edge_fraction = 0.1,
                                     double threshold = 1e-6);

}  // namespace specnoise

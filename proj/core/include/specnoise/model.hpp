#pragma once

#include <string>

#include "specnoise/common.hpp"

namespace specnoise {

/// Physical parameters of the harmonically driven quartic double well
///   V(q,t) = -m w0^2 q^2 / 4 + m^2 w0^4 q^4 / (64 E_b) + S q cos(Omega t + phi)
/// in dimensionless units (m = hbar_eff = w0 = 1 unless overridden).
/// The wells sit at q = +-sqrt(8 E_b / (m w0^2)) with depth -E_b; the
/// barrier top is at V = 0.
struct ModelParams {
    double m = 1.0;
    double omega0 = 1.0;
    double Omega = 0.95;
    double E_b = 100.0;
    double S = 0.0;
    double phi = kPi / 3.0;
    double hbar_eff = 1.0;

    // Test hook: replace the double well by the isochronous oscillator
    // V = m w0^2 q^2 / 2 (drive term kept).
    bool harmonic_only = false;

    double period() const { return kTwoPi / Omega; }
    /// Position of the right potential minimum (static part).
    double q_well() const;

    /// Throws ConfigError if any positivity invariant is violated.
    void validate() const;
};

double potential(double q, double t, const ModelParams& p);
double force(double q, double t, const ModelParams& p);

struct Grid;

/// Discretized static (S = 0) Hamiltonian on the grid: Fourier-spectral
/// kinetic term plus the diagonal potential. Hermitian by construction.
MatC static_hamiltonian(const ModelParams& p, const Grid& grid);

}  // namespace specnoise

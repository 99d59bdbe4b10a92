#pragma once

#include <cstddef>

#include "specnoise/common.hpp"
#include "specnoise/model.hpp"

namespace specnoise {

/// Uniform periodic position grid q_i = q_min + i dq, i = 0..n_points-1
/// (q_max itself is the wrap-around point). n_points is a power of two.
struct Grid {
    double q_min = 0.0;
    double q_max = 0.0;
    int n_points = 0;
    double hbar = 1.0;

    double dq() const { return (q_max - q_min) / n_points; }
    double dp() const { return kTwoPi * hbar / (n_points * dq()); }
    double q(int i) const { return q_min + i * dq(); }
    /// Momentum of FFT bin k (FFT ordering: 0..n/2-1 positive, then negative).
    double p(int k) const {
        const int kk = (k < n_points / 2) ? k : k - n_points;
        return kk * dp();
    }
    double p_nyquist() const { return kPi * hbar / dq(); }
    double length() const { return q_max - q_min; }
};

/// Symmetric grid spanning the classical turning points of the static
/// potential at energy e_max with a 25% position margin (and at least
/// 1.5x the well position), checking that the momentum range covers
/// sqrt(2 m e_max) with margin. Throws ConfigError with the minimum
/// n_points when the requested n_points cannot satisfy both.
Grid build_grid(const ModelParams& p, double e_max, int n_points);

/// Classical turning point q > 0 of the static potential at energy e > 0.
double turning_point(const ModelParams& p, double e);

}  // namespace specnoise

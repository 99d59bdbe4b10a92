#include "specnoise/grid.hpp"

#include <cmath>

namespace specnoise {

namespace {
bool is_power_of_two(int n) { return n >= 2 && (n & (n - 1)) == 0; }
}  // namespace

double turning_point(const ModelParams& p, double e) {
    if (!(e > 0)) throw ConfigError("turning_point: energy must be > 0");
    const double w2 = p.omega0 * p.omega0;
    if (p.harmonic_only) return std::sqrt(2.0 * e / (p.m * w2));
    // A u^2 - B u - e = 0 with u = q^2; the positive root is the outer
    // turning point (barrier top sits at V = 0).
    const double a = p.m * p.m * w2 * w2 / (64.0 * p.E_b);
    const double b = 0.25 * p.m * w2;
    const double u = (b + std::sqrt(b * b + 4.0 * a * e)) / (2.0 * a);
    return std::sqrt(u);
}

Grid build_grid(const ModelParams& p, double e_max, int n_points) {
    p.validate();
    if (!(e_max > 0))
        throw ConfigError("build_grid: e_max must be > 0 (no accessible region)");
    if (!is_power_of_two(n_points))
        throw ConfigError("build_grid: n_points must be a power of two >= 2");

    const double q_span =
        std::max(1.25 * turning_point(p, e_max), 1.5 * p.q_well());
    const double p_need = 1.05 * std::sqrt(2.0 * p.m * e_max);

    Grid g{-q_span, q_span, n_points, p.hbar_eff};
    if (g.p_nyquist() < p_need) {
        // Minimum n with dq small enough: n >= L * p_need / (pi hbar).
        double n_min = 2.0 * q_span * p_need / (kPi * p.hbar_eff);
        int n_req = 2;
        while (n_req < n_min) n_req *= 2;
        throw ConfigError(
            "build_grid: n_points=" + std::to_string(n_points) +
            " cannot cover momenta up to " + std::to_string(p_need) +
            "; minimum n_points=" + std::to_string(n_req));
    }
    return g;
}

}  // namespace specnoise

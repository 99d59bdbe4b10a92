#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specnoise/common.hpp"
#include "specnoise/floquet.hpp"
#include "specnoise/model.hpp"

namespace specnoise {

enum class FieldKind { WignerDiagonal, LiouvilleDiagonal };

/// Real raster over (q, p); values[iq, ip] belongs to (q_axis[iq], p_axis[ip]).
struct PhaseSpaceField {
    std::vector<double> q_axis;
    std::vector<double> p_axis;
    MatD values;  // rows follow q_axis, cols follow p_axis
    double time = 0.0;
    FieldKind kind = FieldKind::WignerDiagonal;

    double cell_area() const;
};

struct PhaseSpaceWindow {
    double q_lo, q_hi, p_lo, p_hi;
};

/// Fig.-1-style default window: q within +-1.5 q_well, p within
/// +-sqrt(2 m * 2 E_b).
PhaseSpaceWindow default_window(const ModelParams& p);

struct Trajectory {
    std::vector<double> t, q, p;
};

/// Symplectic (velocity-Verlet splitting) integration of the driven flow.
/// Throws NumericError with the blow-up time on non-finite states.
Trajectory integrate_trajectory(const ModelParams& par, double q0, double p0,
                                double t_final, double dt);

/// One flow step bundle without storing the path; returns final (q, p).
std::pair<double, double> flow(const ModelParams& par, double q0, double p0,
                               double t0, double t_final, double dt);

struct SectionPoints {
    std::vector<double> q, p;  // all strobe points of surviving seeds
    std::vector<int> seed_of;  // originating seed index per point
    std::vector<int> dropped;  // seeds lost to blow-up
};

SectionPoints poincare_section(const ModelParams& par,
                               const std::vector<std::pair<double, double>>& seeds,
                               int n_periods, double dt);

struct ClassicalReturn {
    double density = 0.0;   // regularized trace estimate over the window
    long n_returned = 0;
    long n_samples = 0;
    bool low_statistics = false;
};

/// Monte-Carlo estimate of the regularized classical return trace over the
/// window: fraction of initial conditions with |Phi_t(r) - r| < epsilon,
/// scaled by window area / (pi epsilon^2).
ClassicalReturn classical_return_probability(const ModelParams& par, double t,
                                             long n_samples, double epsilon,
                                             const PhaseSpaceWindow& w,
                                             double dt, std::uint64_t seed);

/// Diagonal of the Wigner propagator of `u` over the window, normalized so
/// that the full phase-space cell sum times cell area equals |Tr U|^2.
PhaseSpaceField wigner_propagator_diagonal(const UnitaryPropagator& u,
                                           const PhaseSpaceWindow& w,
                                           int res_q, int res_p);

/// Same field over the entire grid phase space at native resolution
/// (2n x 2n); used for exact trace checks.
PhaseSpaceField wigner_propagator_diagonal_full(const UnitaryPropagator& u);

/// (cell-sum x cell-area) / |Tr|^2 where the trace runs over the retained
/// states when `retained_lambda` is given, else over all of U.
double check_trace_identity(const PhaseSpaceField& field,
                            const UnitaryPropagator& u,
                            const std::optional<VecC>& retained_lambda = {});

/// Classical diagonal: per-cell Gaussian-regularized return distance of the
/// flow, exp(-d^2/2 eps^2)/(2 pi eps^2) with d = |Phi_t(r) - r|.
PhaseSpaceField liouville_diagonal_estimate(const ModelParams& par, double t,
                                            const PhaseSpaceWindow& w,
                                            int res_q, int res_p,
                                            double epsilon, double dt);

}  // namespace specnoise

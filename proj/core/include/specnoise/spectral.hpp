#pragma once

#include <optional>
#include <vector>

#include "specnoise/common.hpp"
#include "specnoise/floquet.hpp"

namespace specnoise {

/// Levels mapped to unit mean spacing (stationary series).
struct UnfoldedSpectrum {
    std::vector<double> levels;  // strictly increasing
    int count() const { return static_cast<int>(levels.size()); }
};

/// delta_q = eps_{q+1} - eps_1 - q for q = 1..count-1.
struct DeltaSeries {
    std::vector<double> values;
};

struct PowerSpectrum {
    std::vector<int> k;          // 1..D_w/2
    std::vector<double> values;  // <P_k^delta>
    long n_averaged = 0;         // windows x realizations
    int window_len = 0;
};

struct AlphaFit {
    double alpha = 0.0;
    double log_intercept = 0.0;
    int k_lo = 0, k_hi = 0;
    double residual_rms = 0.0;
};

struct FormFactor {
    std::vector<double> tau;     // l / D_H
    std::vector<double> values;  // K(tau_l)
    int D_H = 0;
};

enum class UnfoldMethod { Linear, Polynomial };

/// Maps raw sorted levels to unit mean spacing. Linear: affine map of the
/// total span onto count-1. Polynomial: least-squares fit of order `order`
/// to the staircase, followed by an exact affine renormalization.
UnfoldedSpectrum unfold(const std::vector<double>& raw,
                        UnfoldMethod method = UnfoldMethod::Linear,
                        int order = 7);

/// Zone unfolding for quasienergies: eps = E * D_H / (hbar Omega), the
/// affine map for a uniform mean density over the Brillouin zone, then
/// shifted to start at 0. Mean spacing is 1 only up to O(1/D_H); use the
/// generic unfold() when the exact unit-spacing invariant matters.
UnfoldedSpectrum unfold_quasienergies(const QuasiSpectrum& spec,
                                      double hbar_eff);

DeltaSeries delta_series(const UnfoldedSpectrum& u);

/// Averaged periodogram of delta series over sliding windows of length
/// window_len (overlap in [0, 0.9]) and over all provided series:
///   P_k = |sum_q delta_q e^{-2 pi i k q / D_w}|^2 / D_w,  k = 1..D_w/2.
PowerSpectrum power_spectrum_delta(const std::vector<DeltaSeries>& ds,
                                   int window_len, double overlap);

AlphaFit fit_alpha(const PowerSpectrum& ps, int k_lo, int k_hi);

/// K(tau_l) = |sum_n exp(2 pi i eps_n l / D_H)|^2 / D_H, tau_l = l/D_H.
/// smooth_width > 0 averages over a moving tau window of that width.
FormFactor form_factor(const UnfoldedSpectrum& u, int l_max,
                       double smooth_width = 0.0);

/// Floquet variant with zone phases: K_l = |sum_n e^{-i E_n l T/hbar}|^2/D_H,
/// identical to |Tr U_retained^l|^2 / D_H.
FormFactor form_factor(const QuasiSpectrum& spec, double hbar_eff, int l_max,
                       double smooth_width = 0.0);

/// |sum_{n in retained} exp(-i E_n l T / hbar)|^2 = D_H K(l / D_H).
double return_probability_qm(const QuasiSpectrum& bound, double hbar_eff,
                             long l);

struct IdentityReport {
    std::vector<double> tau;
    std::vector<double> ratio;    // <P^n> 4 pi^2 tau^2 / <K>
    std::vector<double> p_n;      // ensemble-averaged <P^n(tau)>
    std::vector<double> k_tau;    // ensemble-averaged connected K(tau)
    long n_spectra = 0;
    bool sufficient_averaging = false;  // set from n_spectra
};

/// Checks <P^n(tau)> = K(tau) / (4 pi^2 tau^2) on an ensemble of unfolded
/// spectra. P^n comes from the closed-form continuous Fourier transform of
/// the fluctuating staircase; K from the spectral phase sum with the
/// smooth (Fourier-window) part subtracted. tau_l = l / D_H for l in
/// [l_lo, l_hi].
IdentityReport check_power_formfactor_identity(
    const std::vector<UnfoldedSpectrum>& ensemble, int l_lo, int l_hi);

struct DeviationPoint {
    double tau;
    double value;
    bool omitted;  // classical input was zero at this tau
};

/// D_H^-1 (2 pi tau)^-2 (P_qm - P_cl)/P_cl per tau.
std::vector<DeviationPoint> normalized_deviation(
    const std::vector<double>& tau, const std::vector<double>& p_qm,
    const std::vector<double>& p_cl, double D_H);

}  // namespace specnoise

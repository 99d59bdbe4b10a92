#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "specnoise/io.hpp"
#include "specnoise/model.hpp"
#include "specnoise/rmt.hpp"

namespace specnoise {

inline constexpr const char* kVersion = "0.1.0";

enum class Pipeline { FloquetAlpha, RmtAlpha, FormFactor, PhaseSpace };

Pipeline pipeline_from_string(const std::string& s);
std::string to_string(Pipeline p);

/// Everything needed to reproduce a run bit-exactly: config + seed.
struct RunConfig {
    Pipeline pipeline = Pipeline::RmtAlpha;
    ModelParams model;

    // Floquet / grid settings
    double e_max = 0.0;  // 0 -> 3 E_b
    int n_points = 1024;
    int slices = 4096;
    double edge_fraction = 0.1;
    double edge_threshold = 1e-6;
    int omega_ensemble = 1;       // propagators at Omega*(1 +- jitter)
    double omega_jitter = 0.005;  // total half-width of the jitter set

    // Averaging and fit
    int window_len = 256;  // 0 -> one full-length window
    double overlap = 0.5;
    int k_lo = 1;
    int k_hi = 0;  // 0 -> window_len/8 (floquet) or 50 (rmt)

    // RMT settings
    EnsembleSpec ensemble{EnsembleKind::Poisson, 1000, 50, 0};
    double edge_trim = 0.2;  // Gaussian ensembles: central 1-edge_trim kept
    int unfold_order = 7;

    // Form-factor / identity settings
    int l_max = 0;  // 0 -> D_H
    double tau_lo = 0.05, tau_hi = 0.5;

    // Phase-space settings
    int res_q = 256, res_p = 256;
    double epsilon = 0.0;  // 0 -> sqrt(hbar_eff)
    int n_seeds = 32;
    int n_periods = 256;
    long mc_samples = 20000;

    std::uint64_t seed = 0;
    std::string out_dir = "out";

    double effective_e_max() const { return e_max > 0 ? e_max : 3.0 * model.E_b; }
    void validate() const;
};

json to_json(const RunConfig& c);
RunConfig runconfig_from_json(const json& j);

struct RunReport {
    json summary;
    bool ok = true;
    std::string error;
};

/// Executes the configured pipeline, writes CSV/JSON artifacts plus a
/// manifest under out_dir, and returns the summary.
RunReport run(const RunConfig& config);

/// Independent runs; individual failures are recorded and the sweep
/// continues. Also writes sweep.csv (S, alpha, D_H, residual) under the
/// first config's parent output directory.
std::vector<RunReport> sweep(const std::vector<RunConfig>& configs);

}  // namespace specnoise

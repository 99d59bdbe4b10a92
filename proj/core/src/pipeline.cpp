#include "specnoise/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>

#include "specnoise/phase_space.hpp"
#include "specnoise/rng.hpp"
#include "specnoise/spectral.hpp"

namespace specnoise {

namespace fs = std::filesystem;

Pipeline pipeline_from_string(const std::string& s) {
    if (s == "floquet_alpha") return Pipeline::FloquetAlpha;
    if (s == "rmt_alpha") return Pipeline::RmtAlpha;
    if (s == "formfactor") return Pipeline::FormFactor;
    if (s == "phasespace") return Pipeline::PhaseSpace;
    throw ConfigError("unknown pipeline: " + s);
}

std::string to_string(Pipeline p) {
    switch (p) {
        case Pipeline::FloquetAlpha: return "floquet_alpha";
        case Pipeline::RmtAlpha: return "rmt_alpha";
        case Pipeline::FormFactor: return "formfactor";
        case Pipeline::PhaseSpace: return "phasespace";
    }
    return "?";
}

void RunConfig::validate() const {
    model.validate();
    if (pipeline == Pipeline::RmtAlpha || pipeline == Pipeline::FormFactor)
        ensemble.validate();
    if (overlap < 0.0 || overlap > 0.9)
        throw ConfigError("RunConfig: overlap outside [0, 0.9]");
    if (omega_ensemble < 1)
        throw ConfigError("RunConfig: omega_ensemble must be >= 1");
    if (out_dir.empty()) throw ConfigError("RunConfig: out_dir empty");
}

json to_json(const RunConfig& c) {
    json j;
    j["pipeline"] = to_string(c.pipeline);
    j["model"] = to_json(c.model);
    j["e_max"] = c.e_max;
    j["n_points"] = c.n_points;
    j["slices"] = c.slices;
    j["edge_fraction"] = c.edge_fraction;
    j["edge_threshold"] = c.edge_threshold;
    j["omega_ensemble"] = c.omega_ensemble;
    j["omega_jitter"] = c.omega_jitter;
    j["window_len"] = c.window_len;
    j["overlap"] = c.overlap;
    j["k_lo"] = c.k_lo;
    j["k_hi"] = c.k_hi;
    j["ensemble"] = to_json(c.ensemble);
    j["edge_trim"] = c.edge_trim;
    j["unfold_order"] = c.unfold_order;
    j["l_max"] = c.l_max;
    j["tau_lo"] = c.tau_lo;
    j["tau_hi"] = c.tau_hi;
    j["res_q"] = c.res_q;
    j["res_p"] = c.res_p;
    j["epsilon"] = c.epsilon;
    j["n_seeds"] = c.n_seeds;
    j["n_periods"] = c.n_periods;
    j["mc_samples"] = c.mc_samples;
    j["seed"] = c.seed;
    j["out_dir"] = c.out_dir;
    return j;
}

RunConfig runconfig_from_json(const json& j) {
    RunConfig c;
    try {
        c.pipeline = pipeline_from_string(j.value("pipeline", "rmt_alpha"));
        if (j.contains("model")) c.model = model_from_json(j.at("model"));
        c.e_max = j.value("e_max", 0.0);
        c.n_points = j.value("n_points", 1024);
        c.slices = j.value("slices", 4096);
        c.edge_fraction = j.value("edge_fraction", 0.1);
        c.edge_threshold = j.value("edge_threshold", 1e-6);
        c.omega_ensemble = j.value("omega_ensemble", 1);
        c.omega_jitter = j.value("omega_jitter", 0.005);
        c.window_len = j.value("window_len", 256);
        c.overlap = j.value("overlap", 0.5);
        c.k_lo = j.value("k_lo", 1);
        c.k_hi = j.value("k_hi", 0);
        if (j.contains("ensemble"))
            c.ensemble = ensemble_from_json(j.at("ensemble"));
        c.edge_trim = j.value("edge_trim", 0.2);
        c.unfold_order = j.value("unfold_order", 7);
        c.l_max = j.value("l_max", 0);
        c.tau_lo = j.value("tau_lo", 0.05);
        c.tau_hi = j.value("tau_hi", 0.5);
        c.res_q = j.value("res_q", 256);
        c.res_p = j.value("res_p", 256);
        c.epsilon = j.value("epsilon", 0.0);
        c.n_seeds = j.value("n_seeds", 32);
        c.n_periods = j.value("n_periods", 256);
        c.mc_samples = j.value("mc_samples", 20000L);
        c.seed = j.value("seed", std::uint64_t{0});
        c.out_dir = j.value("out_dir", "out");
    } catch (const json::exception& e) {
        throw ConfigError(std::string("run config: ") + e.what());
    }
    c.validate();
    return c;
}

namespace {

std::vector<UnfoldedSpectrum> unfold_ensemble(const RunConfig& c) {
    auto sequences = sample_levels(c.ensemble);
    const bool gaussian = c.ensemble.kind == EnsembleKind::Goe ||
                          c.ensemble.kind == EnsembleKind::Gue;
    std::vector<UnfoldedSpectrum> out;
    out.reserve(sequences.size());
    for (auto& seq : sequences) {
        if (gaussian) {
            // drop the semicircle edges; the bulk carries the statistics
            const int n = static_cast<int>(seq.size());
            const int cut = static_cast<int>(std::floor(0.5 * c.edge_trim * n));
            std::vector<double> bulk(seq.begin() + cut, seq.end() - cut);
            out.push_back(
                unfold(bulk, UnfoldMethod::Polynomial, c.unfold_order));
        } else {
            out.push_back(unfold(seq, UnfoldMethod::Linear));
        }
    }
    return out;
}

struct FloquetMember {
    QuasiSpectrum bound;
    double omega;
};

std::vector<FloquetMember> floquet_members(const RunConfig& c) {
    std::vector<FloquetMember> members;
    for (int i = 0; i < c.omega_ensemble; ++i) {
        ModelParams p = c.model;
        if (c.omega_ensemble > 1) {
            const double frac = (2.0 * i / (c.omega_ensemble - 1)) - 1.0;
            p.Omega = c.model.Omega * (1.0 + c.omega_jitter * frac);
        }
        Grid g = build_grid(p, c.effective_e_max(), c.n_points);
        UnitaryPropagator u = propagate_period(p, g, c.slices);
        FloquetModes modes = quasienergies(u, p);
        members.push_back(
            {select_bound_states(u, modes, c.edge_fraction, c.edge_threshold),
             p.Omega});
    }
    return members;
}

void write_manifest(const RunConfig& c, double wall_seconds) {
    std::ofstream m(fs::path(c.out_dir) / "manifest.txt");
    m << "specnoise " << kVersion << "\n";
    m << "seed " << c.seed << "\n";
    m << "wall_seconds " << format_g17(wall_seconds) << "\n";
    m << "config " << to_json(c).dump() << "\n";
}

json alpha_summary(const RunConfig& c, const AlphaFit& fit, int d_h,
                   long n_averaged) {
    json s;
    s["alpha"] = fit.alpha;
    s["k_range"] = {fit.k_lo, fit.k_hi};
    s["residual_rms"] = fit.residual_rms;
    s["D_H"] = d_h;
    s["n_averaged"] = n_averaged;
    s["seed"] = c.seed;
    s["pipeline"] = to_string(c.pipeline);
    s["model"] = to_json(c.model);
    return s;
}

json run_rmt_alpha(const RunConfig& c) {
    auto unfolded = unfold_ensemble(c);
    std::vector<DeltaSeries> deltas;
    deltas.reserve(unfolded.size());
    int min_len = 1 << 30;
    for (const auto& u : unfolded) {
        deltas.push_back(delta_series(u));
        min_len = std::min(min_len, static_cast<int>(deltas.back().values.size()));
    }
    const int dw = c.window_len > 0 ? c.window_len : min_len;
    PowerSpectrum ps = power_spectrum_delta(deltas, dw, c.overlap);
    const int k_hi = c.k_hi > 0 ? c.k_hi : std::min(50, dw / 2);
    AlphaFit fit = fit_alpha(ps, c.k_lo, k_hi);

    write_power_spectrum_csv(fs::path(c.out_dir) / "pk.csv", ps);
    write_delta_csv(fs::path(c.out_dir) / "delta.csv", deltas.front());
    return alpha_summary(c, fit, unfolded.front().count(), ps.n_averaged);
}

json run_floquet_alpha(const RunConfig& c) {
    auto members = floquet_members(c);
    std::vector<DeltaSeries> deltas;
    int min_dh = 1 << 30;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const auto& b = members[i].bound;
        min_dh = std::min(min_dh, b.D_H);
        UnfoldedSpectrum u = unfold(b.energies, UnfoldMethod::Linear);
        deltas.push_back(delta_series(u));
        write_levels_csv(fs::path(c.out_dir) /
                             ("quasienergies_" + std::to_string(i) + ".csv"),
                         b.energies);
    }
    const int dw =
        c.window_len > 0 ? c.window_len : (min_dh - 1);
    PowerSpectrum ps = power_spectrum_delta(deltas, dw, c.overlap);
    const int k_hi = c.k_hi > 0 ? c.k_hi : std::max(8, dw / 8);
    AlphaFit fit = fit_alpha(ps, c.k_lo, k_hi);

    write_power_spectrum_csv(fs::path(c.out_dir) / "pk.csv", ps);
    write_delta_csv(fs::path(c.out_dir) / "delta.csv", deltas.front());
    json s = alpha_summary(c, fit, members.front().bound.D_H, ps.n_averaged);
    s["S"] = c.model.S;
    return s;
}

json run_formfactor(const RunConfig& c) {
    auto unfolded = unfold_ensemble(c);
    const int d_h = unfolded.front().count();
    const int l_max = c.l_max > 0 ? c.l_max : d_h;

    FormFactor mean;
    for (std::size_t i = 0; i < unfolded.size(); ++i) {
        FormFactor f = form_factor(unfolded[i], l_max);
        if (i == 0) {
            mean = f;
        } else {
            for (std::size_t j = 0; j < mean.values.size(); ++j)
                mean.values[j] += f.values[j];
        }
    }
    for (auto& v : mean.values) v /= static_cast<double>(unfolded.size());
    write_form_factor_csv(fs::path(c.out_dir) / "formfactor.csv", mean);

    const int l_lo = std::max(1, static_cast<int>(std::lround(c.tau_lo * d_h)));
    const int l_hi = std::max(l_lo, static_cast<int>(std::lround(c.tau_hi * d_h)));
    IdentityReport rep = check_power_formfactor_identity(unfolded, l_lo, l_hi);
    write_csv(fs::path(c.out_dir) / "identity.csv", {"tau", "ratio", "P_n", "K"},
              {rep.tau, rep.ratio, rep.p_n, rep.k_tau});

    double worst = 0.0;
    for (double r : rep.ratio) worst = std::max(worst, std::abs(r - 1.0));
    json s;
    s["pipeline"] = to_string(c.pipeline);
    s["D_H"] = d_h;
    s["n_spectra"] = rep.n_spectra;
    s["sufficient_averaging"] = rep.sufficient_averaging;
    s["identity_max_abs_dev"] = worst;
    s["seed"] = c.seed;
    return s;
}

json run_phasespace(const RunConfig& c) {
    ModelParams p = c.model;
    Grid g = build_grid(p, c.effective_e_max(), c.n_points);
    UnitaryPropagator u = propagate_period(p, g, c.slices);

    PhaseSpaceWindow w = default_window(p);
    PhaseSpaceField wig = wigner_propagator_diagonal(u, w, c.res_q, c.res_p);
    save_field(fs::path(c.out_dir) / "wigner_diag.bin", wig);
    write_field_csv(fs::path(c.out_dir) / "wigner_diag.csv", wig);

    const double eps = c.epsilon > 0 ? c.epsilon : std::sqrt(p.hbar_eff);
    const double dt = p.period() / 2048.0;
    PhaseSpaceField liou = liouville_diagonal_estimate(p, p.period(), w, c.res_q,
                                                       c.res_p, eps, dt);
    save_field(fs::path(c.out_dir) / "liouville_diag.bin", liou);
    write_field_csv(fs::path(c.out_dir) / "liouville_diag.csv", liou);

    // Poincare section from seeded initial conditions in the window.
    auto rng = make_rng(c.seed, 1);
    std::uniform_real_distribution<double> uq(w.q_lo, w.q_hi);
    std::uniform_real_distribution<double> up(w.p_lo, w.p_hi);
    std::vector<std::pair<double, double>> seeds;
    for (int i = 0; i < c.n_seeds; ++i) seeds.emplace_back(uq(rng), up(rng));
    SectionPoints sec = poincare_section(p, seeds, c.n_periods, dt);
    std::vector<double> sq(sec.q), sp(sec.p), ss(sec.seed_of.begin(),
                                                 sec.seed_of.end());
    write_csv(fs::path(c.out_dir) / "poincare.csv", {"q", "p", "seed"},
              {sq, sp, ss});

    ClassicalReturn cr = classical_return_probability(
        p, p.period(), c.mc_samples, eps, w, dt, c.seed);

    PhaseSpaceField full = wigner_propagator_diagonal_full(u);
    const double ratio = check_trace_identity(full, u);

    json s;
    s["pipeline"] = to_string(c.pipeline);
    s["trace_identity_ratio"] = ratio;
    s["classical_return_density"] = cr.density;
    s["classical_return_low_statistics"] = cr.low_statistics;
    s["poincare_dropped_seeds"] = sec.dropped.size();
    s["S"] = p.S;
    s["seed"] = c.seed;
    return s;
}

}  // namespace

RunReport run(const RunConfig& config) {
    config.validate();
    fs::create_directories(config.out_dir);
    const auto t0 = std::chrono::steady_clock::now();

    RunReport rep;
    switch (config.pipeline) {
        case Pipeline::RmtAlpha: rep.summary = run_rmt_alpha(config); break;
        case Pipeline::FloquetAlpha:
            rep.summary = run_floquet_alpha(config);
            break;
        case Pipeline::FormFactor: rep.summary = run_formfactor(config); break;
        case Pipeline::PhaseSpace: rep.summary = run_phasespace(config); break;
    }

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    write_manifest(config, wall);
    {
        std::ofstream f(fs::path(config.out_dir) / "summary.json");
        f << rep.summary.dump(2) << "\n";
    }
    {
        std::ofstream f(fs::path(config.out_dir) / "config.json");
        f << to_json(config).dump(2) << "\n";
    }
    return rep;
}

std::vector<RunReport> sweep(const std::vector<RunConfig>& configs) {
    if (configs.empty()) throw ConfigError("sweep: no configs");
    std::vector<RunReport> reports;
    std::vector<double> col_s, col_alpha, col_dh, col_res;
    for (const auto& c : configs) {
        RunReport r;
        try {
            r = run(c);
        } catch (const std::exception& e) {
            r.ok = false;
            r.error = e.what();
        }
        if (r.ok && r.summary.contains("alpha")) {
            col_s.push_back(c.model.S);
            col_alpha.push_back(r.summary["alpha"].get<double>());
            col_dh.push_back(r.summary["D_H"].get<double>());
            col_res.push_back(r.summary["residual_rms"].get<double>());
        }
        reports.push_back(std::move(r));
    }
    if (!col_s.empty()) {
        fs::path base = fs::path(configs.front().out_dir).parent_path();
        if (base.empty()) base = ".";
        write_csv(base / "sweep.csv", {"S", "alpha", "D_H", "residual_rms"},
                  {col_s, col_alpha, col_dh, col_res});
    }
    return reports;
}

}  // namespace specnoise

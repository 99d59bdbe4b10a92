#include "specnoise/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "specnoise/fft.hpp"
#include "specnoise/rng.hpp"
#include "specnoise/wigner.hpp"

namespace specnoise {

double PhaseSpaceField::cell_area() const {
    if (q_axis.size() < 2 || p_axis.size() < 2)
        throw ConfigError("PhaseSpaceField: need at least 2x2 cells");
    return (q_axis[1] - q_axis[0]) * (p_axis[1] - p_axis[0]);
}

PhaseSpaceWindow default_window(const ModelParams& p) {
    const double qw = 1.5 * p.q_well();
    const double pw = std::sqrt(2.0 * p.m * 2.0 * p.E_b);
    return PhaseSpaceWindow{-qw, qw, -pw, pw};
}

namespace {

void check_finite(double q, double p, double t) {
    if (!std::isfinite(q) || !std::isfinite(p))
        throw NumericError("trajectory blow-up at t=" + std::to_string(t));
}

// One velocity-Verlet step (kick-drift-kick); exactly area preserving.
inline void vv_step(const ModelParams& par, double& q, double& p, double t,
                    double dt) {
    p += 0.5 * dt * force(q, t, par);
    q += dt * p / par.m;
    p += 0.5 * dt * force(q, t + dt, par);
}

}  // namespace

Trajectory integrate_trajectory(const ModelParams& par, double q0, double p0,
                                double t_final, double dt) {
    par.validate();
    if (!(dt > 0) || dt > par.period() / 1024.0)
        throw ConfigError("integrate_trajectory: require 0 < dt <= T/1024");
    Trajectory tr;
    const long n = std::lround(t_final / dt);
    tr.t.reserve(n + 1);
    tr.q.reserve(n + 1);
    tr.p.reserve(n + 1);
    double q = q0, p = p0;
    tr.t.push_back(0.0);
    tr.q.push_back(q);
    tr.p.push_back(p);
    for (long i = 0; i < n; ++i) {
        const double t = i * dt;
        vv_step(par, q, p, t, dt);
        check_finite(q, p, t + dt);
        tr.t.push_back(t + dt);
        tr.q.push_back(q);
        tr.p.push_back(p);
    }
    return tr;
}

std::pair<double, double> flow(const ModelParams& par, double q0, double p0,
                               double t0, double t_final, double dt) {
    const long n = std::lround((t_final - t0) / dt);
    double q = q0, p = p0;
    for (long i = 0; i < n; ++i) {
        vv_step(par, q, p, t0 + i * dt, dt);
    }
    check_finite(q, p, t_final);
    return {q, p};
}

SectionPoints poincare_section(
    const ModelParams& par, const std::vector<std::pair<double, double>>& seeds,
    int n_periods, double dt) {
    if (n_periods < 1) throw ConfigError("poincare_section: n_periods >= 1");
    const double T = par.period();
    SectionPoints out;
    for (int s = 0; s < static_cast<int>(seeds.size()); ++s) {
        double q = seeds[s].first, p = seeds[s].second;
        try {
            for (int l = 1; l <= n_periods; ++l) {
                std::tie(q, p) = flow(par, q, p, (l - 1) * T, l * T, dt);
                out.q.push_back(q);
                out.p.push_back(p);
                out.seed_of.push_back(s);
            }
        } catch (const NumericError&) {
            out.dropped.push_back(s);
            // strobe points already collected from this seed are discarded
            while (!out.seed_of.empty() && out.seed_of.back() == s) {
                out.q.pop_back();
                out.p.pop_back();
                out.seed_of.pop_back();
            }
        }
    }
    return out;
}

ClassicalReturn classical_return_probability(const ModelParams& par, double t,
                                             long n_samples, double epsilon,
                                             const PhaseSpaceWindow& w,
                                             double dt, std::uint64_t seed) {
    if (!(epsilon > 0))
        throw ConfigError("classical_return_probability: epsilon must be > 0");
    if (n_samples < 10000)
        throw ConfigError("classical_return_probability: n_samples >= 1e4");
    auto rng = make_rng(seed, 0);
    std::uniform_real_distribution<double> uq(w.q_lo, w.q_hi);
    std::uniform_real_distribution<double> up(w.p_lo, w.p_hi);

    long hits = 0;
    for (long i = 0; i < n_samples; ++i) {
        const double q0 = uq(rng), p0 = up(rng);
        try {
            auto [q1, p1] = flow(par, q0, p0, 0.0, t, dt);
            const double d2 = (q1 - q0) * (q1 - q0) + (p1 - p0) * (p1 - p0);
            if (d2 < epsilon * epsilon) ++hits;
        } catch (const NumericError&) {
            // escaped samples count as non-returning
        }
    }
    const double area = (w.q_hi - w.q_lo) * (w.p_hi - w.p_lo);
    ClassicalReturn out;
    out.n_returned = hits;
    out.n_samples = n_samples;
    out.low_statistics = hits == 0;
    out.density =
        area * static_cast<double>(hits) / (n_samples * kPi * epsilon * epsilon);
    return out;
}

namespace {

/// Row c of the diagonal propagator raster (all fine momentum bins, FFT
/// ordering), unnormalized.
void diagonal_raster_row(const MatC& uf, int c, const FftPlan1d& plan,
                         VecC& line) {
    const int nf = static_cast<int>(uf.rows());
    const int jmax = std::min(c, nf - 1 - c);
    line.setZero();
    for (int sig = -2 * jmax; sig <= 2 * jmax; ++sig) {
        const int lo = std::max(-jmax, -jmax - sig);
        const int hi = std::min(jmax, jmax - sig);
        Complex acc = 0.0;
        for (int jp = lo; jp <= hi; ++jp) {
            acc += uf(c + jp + sig, c + jp) *
                   std::conj(uf(c - jp - sig, c - jp));
        }
        line[(sig + 2 * nf) % nf] += acc;
    }
    plan.execute(line.data());
}

}  // namespace

PhaseSpaceField wigner_propagator_diagonal(const UnitaryPropagator& u,
                                           const PhaseSpaceWindow& w,
                                           int res_q, int res_p) {
    const Grid& g = u.grid;
    if (res_q < 2 || res_p < 2)
        throw ConfigError("wigner_propagator_diagonal: resolution too small");
    if (w.q_lo < g.q_min || w.q_hi > g.q_max ||
        std::abs(w.p_lo) > g.p_nyquist() || std::abs(w.p_hi) > g.p_nyquist())
        throw ConfigError(
            "wigner_propagator_diagonal: window exceeds grid support");

    const int nf = 2 * g.n_points;
    const double h = 0.5 * g.dq();
    const double dp_fine = kTwoPi * g.hbar / (nf * g.dq());
    MatC uf = upsample_matrix(u.matrix);

    PhaseSpaceField f;
    f.kind = FieldKind::WignerDiagonal;
    f.time = u.period;
    f.q_axis.resize(res_q);
    f.p_axis.resize(res_p);
    f.values.resize(res_q, res_p);

    std::vector<int> mbin(res_p);
    for (int ip = 0; ip < res_p; ++ip) {
        f.p_axis[ip] = w.p_lo + (ip + 0.5) * (w.p_hi - w.p_lo) / res_p;
        int mm = static_cast<int>(std::lround(f.p_axis[ip] / dp_fine));
        mbin[ip] = (mm + nf) % nf;
    }

    FftPlan1d plan(nf, -1);
    VecC line(nf);
    const double norm = 1.0 / (kTwoPi * g.hbar);
    for (int iq = 0; iq < res_q; ++iq) {
        const double qt = w.q_lo + (iq + 0.5) * (w.q_hi - w.q_lo) / res_q;
        int c = static_cast<int>(std::lround((qt - g.q_min) / h));
        c = std::clamp(c, 0, nf - 1);
        f.q_axis[iq] = g.q_min + c * h;
        diagonal_raster_row(uf, c, plan, line);
        for (int ip = 0; ip < res_p; ++ip)
            f.values(iq, ip) = norm * line[mbin[ip]].real();
    }
    return f;
}

PhaseSpaceField wigner_propagator_diagonal_full(const UnitaryPropagator& u) {
    const Grid& g = u.grid;
    const int nf = 2 * g.n_points;
    const double h = 0.5 * g.dq();
    const double dp_fine = kTwoPi * g.hbar / (nf * g.dq());
    MatC uf = upsample_matrix(u.matrix);

    PhaseSpaceField f;
    f.kind = FieldKind::WignerDiagonal;
    f.time = u.period;
    f.q_axis.resize(nf);
    f.p_axis.resize(nf);
    f.values.resize(nf, nf);
    for (int c = 0; c < nf; ++c) f.q_axis[c] = g.q_min + c * h;
    for (int ip = 0; ip < nf; ++ip)
        f.p_axis[ip] = (ip - nf / 2) * dp_fine;  // sorted momenta

    FftPlan1d plan(nf, -1);
    VecC line(nf);
    const double norm = 1.0 / (kTwoPi * g.hbar);
    for (int c = 0; c < nf; ++c) {
        diagonal_raster_row(uf, c, plan, line);
        for (int ip = 0; ip < nf; ++ip) {
            const int m = (ip - nf / 2 + nf) % nf;  // sorted -> FFT bin
            f.values(c, ip) = norm * line[m].real();
        }
    }
    return f;
}

double check_trace_identity(const PhaseSpaceField& field,
                            const UnitaryPropagator& u,
                            const std::optional<VecC>& retained_lambda) {
    const double integral = field.values.sum() * field.cell_area();
    Complex tr = 0.0;
    if (retained_lambda) {
        for (Eigen::Index i = 0; i < retained_lambda->size(); ++i)
            tr += (*retained_lambda)[i];
    } else {
        tr = u.matrix.trace();
    }
    return integral / std::norm(tr);
}

PhaseSpaceField liouville_diagonal_estimate(const ModelParams& par, double t,
                                            const PhaseSpaceWindow& w,
                                            int res_q, int res_p,
                                            double epsilon, double dt) {
    if (!(epsilon > 0))
        throw ConfigError("liouville_diagonal_estimate: epsilon must be > 0");
    PhaseSpaceField f;
    f.kind = FieldKind::LiouvilleDiagonal;
    f.time = t;
    f.q_axis.resize(res_q);
    f.p_axis.resize(res_p);
    f.values.setZero(res_q, res_p);
    for (int iq = 0; iq < res_q; ++iq)
        f.q_axis[iq] = w.q_lo + (iq + 0.5) * (w.q_hi - w.q_lo) / res_q;
    for (int ip = 0; ip < res_p; ++ip)
        f.p_axis[ip] = w.p_lo + (ip + 0.5) * (w.p_hi - w.p_lo) / res_p;

    const double k = 1.0 / (kTwoPi * epsilon * epsilon);
    for (int iq = 0; iq < res_q; ++iq) {
        for (int ip = 0; ip < res_p; ++ip) {
            const double q0 = f.q_axis[iq], p0 = f.p_axis[ip];
            try {
                auto [q1, p1] = flow(par, q0, p0, 0.0, t, dt);
                const double d2 =
                    (q1 - q0) * (q1 - q0) + (p1 - p0) * (p1 - p0);
                f.values(iq, ip) = k * std::exp(-0.5 * d2 / (epsilon * epsilon));
            } catch (const NumericError&) {
                f.values(iq, ip) = 0.0;  // escaped cell
            }
        }
    }
    return f;
}

}  // namespace specnoise

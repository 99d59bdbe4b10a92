#include "specnoise/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "specnoise/fft.hpp"

namespace specnoise {

namespace {

void require_sorted(const std::vector<double>& x, const char* who) {
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1]))
            throw ConfigError(std::string(who) + ": levels not strictly sorted");
}

/// Affine rescale to mean spacing exactly 1 starting at 0.
void renormalize(std::vector<double>& e) {
    const std::size_t n = e.size();
    const double span = e.back() - e.front();
    const double scale = static_cast<double>(n - 1) / span;
    const double e0 = e.front();
    for (auto& x : e) x = (x - e0) * scale;
}

}  // namespace

UnfoldedSpectrum unfold(const std::vector<double>& raw, UnfoldMethod method,
                        int order) {
    if (raw.size() < 16) throw ConfigError("unfold: need at least 16 levels");
    require_sorted(raw, "unfold");

    UnfoldedSpectrum out;
    out.levels = raw;
    if (method == UnfoldMethod::Linear) {
        renormalize(out.levels);
        return out;
    }

    // Polynomial fit of the staircase N(E) (value i + 1/2 at the i-th level,
    // 0-based) in the variable scaled to [-1, 1] for conditioning.
    const int n = static_cast<int>(raw.size());
    if (order < 1 || order >= n)
        throw ConfigError("unfold: polynomial order out of range");
    const double lo = raw.front(), hi = raw.back();
    auto scaled = [&](double e) { return 2.0 * (e - lo) / (hi - lo) - 1.0; };

    MatD a(n, order + 1);
    VecD b(n);
    for (int i = 0; i < n; ++i) {
        const double x = scaled(raw[i]);
        double pw = 1.0;
        for (int j = 0; j <= order; ++j) {
            a(i, j) = pw;
            pw *= x;
        }
        b[i] = i + 0.5;
    }
    VecD coef = a.householderQr().solve(b);

    for (int i = 0; i < n; ++i) {
        const double x = scaled(raw[i]);
        double acc = 0.0, pw = 1.0;
        for (int j = 0; j <= order; ++j) {
            acc += coef[j] * pw;
            pw *= x;
        }
        out.levels[i] = acc;
    }
    for (int i = 1; i < n; ++i)
        if (!(out.levels[i] > out.levels[i - 1]))
            throw ConfigError("unfold: polynomial fit degenerate (non-monotone)");
    renormalize(out.levels);
    return out;
}

UnfoldedSpectrum unfold_quasienergies(const QuasiSpectrum& spec,
                                      double hbar_eff) {
    require_sorted(spec.energies, "unfold_quasienergies");
    const double scale = spec.D_H / (hbar_eff * spec.Omega);
    UnfoldedSpectrum out;
    out.levels.reserve(spec.energies.size());
    const double e0 = spec.energies.front();
    for (double e : spec.energies) out.levels.push_back((e - e0) * scale);
    return out;
}

DeltaSeries delta_series(const UnfoldedSpectrum& u) {
    if (u.count() < 2) throw ConfigError("delta_series: need >= 2 levels");
    DeltaSeries d;
    d.values.resize(u.count() - 1);
    for (int q = 1; q < u.count(); ++q)
        d.values[q - 1] = u.levels[q] - u.levels[0] - q;
    return d;
}

PowerSpectrum power_spectrum_delta(const std::vector<DeltaSeries>& ds,
                                   int window_len, double overlap) {
    if (window_len < 2)
        throw ConfigError("power_spectrum_delta: window_len too small");
    if (overlap < 0.0 || overlap > 0.9)
        throw ConfigError("power_spectrum_delta: overlap outside [0, 0.9]");
    const int dw = window_len;
    const int kmax = dw / 2;
    const int step = std::max(1, static_cast<int>(std::lround(dw * (1.0 - overlap))));

    PowerSpectrum ps;
    ps.window_len = dw;
    ps.k.resize(kmax);
    for (int k = 1; k <= kmax; ++k) ps.k[k - 1] = k;
    ps.values.assign(kmax, 0.0);

    FftPlan1d plan(dw, -1);
    std::vector<Complex> buf(dw);
    for (const auto& d : ds) {
        const int len = static_cast<int>(d.values.size());
        for (int start = 0; start + dw <= len; start += step) {
            for (int q = 0; q < dw; ++q) buf[q] = d.values[start + q];
            plan.execute(buf.data());
            for (int k = 1; k <= kmax; ++k)
                ps.values[k - 1] += std::norm(buf[k]) / dw;
            ++ps.n_averaged;
        }
    }
    if (ps.n_averaged == 0)
        throw ConfigError("power_spectrum_delta: no full window fits the data");
    for (auto& v : ps.values) v /= static_cast<double>(ps.n_averaged);
    return ps;
}

AlphaFit fit_alpha(const PowerSpectrum& ps, int k_lo, int k_hi) {
    if (k_lo < 1 || k_hi > ps.k.back() || k_hi < k_lo)
        throw ConfigError("fit_alpha: k range invalid");
    const int npts = k_hi - k_lo + 1;
    if (npts < 8) throw ConfigError("fit_alpha: need at least 8 points");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double p = ps.values[k - 1];
        if (!(p > 0.0))
            throw ConfigError("fit_alpha: non-positive P_k in fit range");
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(p);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = npts * sxx - sx * sx;
    const double slope = (npts * sxy - sx * sy) / denom;
    const double icept = (sy - slope * sx) / npts;

    double ss = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double x = std::log(static_cast<double>(k));
        const double r = std::log(ps.values[k - 1]) - (icept + slope * x);
        ss += r * r;
    }
    return AlphaFit{-slope, icept, k_lo, k_hi, std::sqrt(ss / npts)};
}

namespace {

FormFactor smooth_formfactor(FormFactor raw, double smooth_width) {
    if (smooth_width <= 0.0 || raw.tau.size() < 3) return raw;
    FormFactor out = raw;
    const int n = static_cast<int>(raw.tau.size());
    for (int i = 0; i < n; ++i) {
        if (raw.tau[i] == 0.0) continue;  // keep K(0) = D_H exact
        double acc = 0.0;
        int cnt = 0;
        for (int j = 0; j < n; ++j) {
            if (raw.tau[j] == 0.0) continue;
            if (std::abs(raw.tau[j] - raw.tau[i]) <= 0.5 * smooth_width) {
                acc += raw.values[j];
                ++cnt;
            }
        }
        out.values[i] = acc / cnt;
    }
    return out;
}

}  // namespace

FormFactor form_factor(const UnfoldedSpectrum& u, int l_max,
                       double smooth_width) {
    const int n = u.count();
    if (n < 2) throw ConfigError("form_factor: need >= 2 levels");
    FormFactor f;
    f.D_H = n;
    for (int l = 0; l <= l_max; ++l) {
        const double w = kTwoPi * l / n;
        Complex s = 0.0;
        for (double e : u.levels) s += Complex(std::cos(w * e), std::sin(w * e));
        f.tau.push_back(static_cast<double>(l) / n);
        f.values.push_back(std::norm(s) / n);
    }
    return smooth_formfactor(std::move(f), smooth_width);
}

FormFactor form_factor(const QuasiSpectrum& spec, double hbar_eff, int l_max,
                       double smooth_width) {
    const int n = spec.D_H;
    if (n < 2) throw ConfigError("form_factor: need >= 2 levels");
    const double T = kTwoPi / spec.Omega;
    FormFactor f;
    f.D_H = n;
    for (int l = 0; l <= l_max; ++l) {
        Complex s = 0.0;
        for (double e : spec.energies) {
            const double a = -e * l * T / hbar_eff;
            s += Complex(std::cos(a), std::sin(a));
        }
        f.tau.push_back(static_cast<double>(l) / n);
        f.values.push_back(std::norm(s) / n);
    }
    return smooth_formfactor(std::move(f), smooth_width);
}

double return_probability_qm(const QuasiSpectrum& bound, double hbar_eff,
                             long l) {
    if (l < 1) throw ConfigError("return_probability_qm: l must be >= 1");
    const double T = kTwoPi / bound.Omega;
    Complex s = 0.0;
    for (double e : bound.energies) {
        const double a = -e * l * T / hbar_eff;
        s += Complex(std::cos(a), std::sin(a));
    }
    return std::norm(s);
}

namespace {

/// Closed-form continuous Fourier transform of the fluctuating staircase
/// n~(eps) = (count below eps - 1) - (eps - eps_1) over [eps_1, eps_N]:
/// integral of (c_i - eps) e^{-i w eps} on each inter-level segment.
Complex staircase_transform(const std::vector<double>& e, double w) {
    const int n = static_cast<int>(e.size());
    const Complex iw(0.0, w);
    Complex acc = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const double c = i + e.front();  // count - 1 = i on [e_i, e_{i+1})
        const Complex ph0 = std::exp(-iw * e[i]);
        const Complex ph1 = std::exp(-iw * e[i + 1]);
        // int (c - eps) e^{-iw eps} deps =
        //   [(c - eps) e^{-iw eps}/(-iw)]  - [e^{-iw eps}/w^2]
        acc += ((c - e[i + 1]) * ph1 - (c - e[i]) * ph0) / (-iw);
        acc -= (ph1 - ph0) / (w * w);
    }
    return acc;
}

}  // namespace

IdentityReport check_power_formfactor_identity(
    const std::vector<UnfoldedSpectrum>& ensemble, int l_lo, int l_hi) {
    if (ensemble.empty())
        throw ConfigError("check_power_formfactor_identity: empty ensemble");
    if (l_lo < 1 || l_hi < l_lo)
        throw ConfigError("check_power_formfactor_identity: bad l range");
    const int d_h = ensemble.front().count();

    IdentityReport rep;
    rep.n_spectra = static_cast<long>(ensemble.size());
    rep.sufficient_averaging = rep.n_spectra >= 10;

    const int nl = l_hi - l_lo + 1;
    rep.tau.resize(nl);
    rep.p_n.assign(nl, 0.0);
    rep.k_tau.assign(nl, 0.0);

    for (const auto& u : ensemble) {
        const int n = u.count();
        const double len = u.levels.back() - u.levels.front();
        for (int j = 0; j < nl; ++j) {
            const double tau = static_cast<double>(l_lo + j) / d_h;
            const double w = kTwoPi * tau;
            // power spectrum of the fluctuating staircase
            rep.p_n[j] += std::norm(staircase_transform(u.levels, w)) / len;
            // connected form factor: phase sum minus its smooth part
            Complex s = 0.0;
            for (double e : u.levels)
                s += Complex(std::cos(w * e), -std::sin(w * e));
            const Complex iw(0.0, w);
            const Complex smooth = (std::exp(-iw * u.levels.back()) -
                                    std::exp(-iw * u.levels.front())) /
                                   (-iw);
            rep.k_tau[j] += std::norm(s - smooth) / n;
        }
    }
    for (int j = 0; j < nl; ++j) {
        rep.tau[j] = static_cast<double>(l_lo + j) / d_h;
        rep.p_n[j] /= rep.n_spectra;
        rep.k_tau[j] /= rep.n_spectra;
        const double t2 = rep.tau[j] * rep.tau[j];
        rep.ratio.push_back(rep.p_n[j] * 4.0 * kPi * kPi * t2 / rep.k_tau[j]);
    }
    return rep;
}

std::vector<DeviationPoint> normalized_deviation(
    const std::vector<double>& tau, const std::vector<double>& p_qm,
    const std::vector<double>& p_cl, double D_H) {
    if (tau.size() != p_qm.size() || tau.size() != p_cl.size())
        throw ConfigError("normalized_deviation: mismatched input lengths");
    std::vector<DeviationPoint> out;
    out.reserve(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) {
        DeviationPoint pt{tau[i], 0.0, false};
        if (p_cl[i] == 0.0) {
            pt.omitted = true;
        } else {
            const double pref = 1.0 / (D_H * std::pow(kTwoPi * tau[i], 2));
            pt.value = pref * (p_qm[i] - p_cl[i]) / p_cl[i];
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace specnoise

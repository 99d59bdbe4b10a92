#include "specnoise/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "specnoise/linalg.hpp"
#include "specnoise/rng.hpp"

namespace specnoise {

EnsembleKind ensemble_kind_from_string(const std::string& s) {
    if (s == "goe") return EnsembleKind::Goe;
    if (s == "gue") return EnsembleKind::Gue;
    if (s == "cue") return EnsembleKind::Cue;
    if (s == "coe") return EnsembleKind::Coe;
    if (s == "poisson") return EnsembleKind::Poisson;
    if (s == "gse")
        throw ConfigError(
            "gse sampling is not implemented; use theory_pk(Beta4, ...)");
    throw ConfigError("unknown ensemble kind: " + s);
}

std::string to_string(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::Goe: return "goe";
        case EnsembleKind::Gue: return "gue";
        case EnsembleKind::Cue: return "cue";
        case EnsembleKind::Coe: return "coe";
        case EnsembleKind::Poisson: return "poisson";
    }
    return "?";
}

void EnsembleSpec::validate() const {
    if (dim < 16) throw ConfigError("EnsembleSpec: dim must be >= 16");
    if (realizations < 1)
        throw ConfigError("EnsembleSpec: realizations must be >= 1");
}

namespace {

MatC haar_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatC g(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<MatC> qr(g);
    MatC q = qr.householderQ();
    MatC r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase gauge so Q is Haar distributed.
    for (int j = 0; j < n; ++j) {
        Complex d = r(j, j);
        q.col(j) *= d / std::abs(d);
    }
    return q;
}

std::vector<double> sorted_phases(const MatC& u) {
    ComplexEig eig = eig_general(u, false);
    std::vector<double> ph(eig.values.size());
    for (std::size_t i = 0; i < ph.size(); ++i)
        ph[i] = std::arg(eig.values[i]);
    std::sort(ph.begin(), ph.end());
    return ph;
}

std::vector<double> one_realization(const EnsembleSpec& spec,
                                    std::mt19937_64& rng) {
    const int n = spec.dim;
    std::normal_distribution<double> gauss(0.0, 1.0);
    switch (spec.kind) {
        case EnsembleKind::Goe: {
            MatD h(n, n);
            const double off = 1.0 / std::sqrt(2.0);
            for (int i = 0; i < n; ++i) {
                h(i, i) = gauss(rng);
                for (int j = i + 1; j < n; ++j)
                    h(i, j) = h(j, i) = off * gauss(rng);
            }
            VecD w = eigvals_symmetric(h);
            return {w.data(), w.data() + n};
        }
        case EnsembleKind::Gue: {
            MatC h(n, n);
            const double off = 1.0 / std::sqrt(2.0);
            for (int i = 0; i < n; ++i) {
                h(i, i) = gauss(rng);
                for (int j = i + 1; j < n; ++j) {
                    const Complex z(off * gauss(rng), off * gauss(rng));
                    h(i, j) = z;
                    h(j, i) = std::conj(z);
                }
            }
            VecD w = eigvals_hermitian(h);
            return {w.data(), w.data() + n};
        }
        case EnsembleKind::Cue:
            return sorted_phases(haar_unitary(n, rng));
        case EnsembleKind::Coe: {
            MatC u = haar_unitary(n, rng);
            MatC s = u.transpose() * u;
            return sorted_phases(s);
        }
        case EnsembleKind::Poisson: {
            std::uniform_real_distribution<double> uni(0.0, double(n));
            std::vector<double> lv(n);
            for (auto& x : lv) x = uni(rng);
            std::sort(lv.begin(), lv.end());
            return lv;
        }
    }
    throw ConfigError("sample_levels: unsupported ensemble");
}

}  // namespace

std::vector<std::vector<double>> sample_levels(const EnsembleSpec& spec) {
    spec.validate();
    std::vector<std::vector<double>> out;
    out.reserve(spec.realizations);
    for (int r = 0; r < spec.realizations; ++r) {
        auto rng = make_rng(spec.seed, static_cast<std::uint64_t>(r));
        out.push_back(one_realization(spec, rng));
    }
    return out;
}

double theory_pk(TheoryClass kind, int D_H, int k) {
    if (k < 1) throw ConfigError("theory_pk: k must be >= 1");
    if (k >= D_H) throw ConfigError("theory_pk: k >= D_H (outside validity)");
    const double dh = D_H;
    switch (kind) {
        case TheoryClass::Beta1: return dh / (2.0 * 1.0 * kPi * kPi * k);
        case TheoryClass::Beta2: return dh / (2.0 * 2.0 * kPi * kPi * k);
        case TheoryClass::Beta4: return dh / (2.0 * 4.0 * kPi * kPi * k);
        case TheoryClass::Poisson:
            return dh * dh / (4.0 * kPi * kPi * double(k) * k);
    }
    throw ConfigError("theory_pk: unsupported class");
}

}  // namespace specnoise

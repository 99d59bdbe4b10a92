#include "specnoise/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace specnoise {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path, bool binary = false) {
    std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
    if (!f) throw ConfigError("cannot open for writing: " + path.string());
    return f;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary = false) {
    std::ifstream f(path, binary ? std::ios::binary : std::ios::in);
    if (!f) throw ConfigError("cannot open for reading: " + path.string());
    return f;
}

void put_i64(std::ostream& os, std::int64_t v) {
    os.write(reinterpret_cast<const char*>(&v), 8);
}
void put_f64(std::ostream& os, double v) {
    os.write(reinterpret_cast<const char*>(&v), 8);
}
std::int64_t get_i64(std::istream& is) {
    std::int64_t v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}
double get_f64(std::istream& is) {
    double v;
    is.read(reinterpret_cast<char*>(&v), 8);
    return v;
}

}  // namespace

void write_csv(const std::filesystem::path& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
    if (columns.empty() || header.size() != columns.size())
        throw ConfigError("write_csv: header/column mismatch");
    auto f = open_out(path);
    for (std::size_t j = 0; j < header.size(); ++j)
        f << header[j] << (j + 1 < header.size() ? ',' : '\n');
    const std::size_t rows = columns.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j)
            f << format_g17(columns[j][i])
              << (j + 1 < columns.size() ? ',' : '\n');
    }
}

void write_levels_csv(const std::filesystem::path& path,
                      const std::vector<double>& levels) {
    auto f = open_out(path);
    for (double e : levels) f << format_g17(e) << '\n';
}

void write_power_spectrum_csv(const std::filesystem::path& path,
                              const PowerSpectrum& ps) {
    std::vector<double> k(ps.k.begin(), ps.k.end());
    write_csv(path, {"k", "P_k"}, {k, ps.values});
}

void write_form_factor_csv(const std::filesystem::path& path,
                           const FormFactor& f) {
    write_csv(path, {"tau", "K"}, {f.tau, f.values});
}

void write_delta_csv(const std::filesystem::path& path, const DeltaSeries& d) {
    std::vector<double> q(d.values.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = double(i + 1);
    write_csv(path, {"q", "delta_q"}, {q, d.values});
}

void write_field_csv(const std::filesystem::path& path,
                     const PhaseSpaceField& f) {
    auto os = open_out(path);
    os << "q,p,value\n";
    for (std::size_t iq = 0; iq < f.q_axis.size(); ++iq)
        for (std::size_t ip = 0; ip < f.p_axis.size(); ++ip)
            os << format_g17(f.q_axis[iq]) << ',' << format_g17(f.p_axis[ip])
               << ',' << format_g17(f.values(iq, ip)) << '\n';
}

void save_propagator(const std::filesystem::path& path,
                     const UnitaryPropagator& u) {
    auto os = open_out(path, true);
    os.write("SNPROP01", 8);
    const std::int64_t n = u.grid.n_points;
    put_i64(os, n);
    put_f64(os, u.period);
    put_i64(os, u.slices);
    put_f64(os, u.grid.q_min);
    put_f64(os, u.grid.q_max);
    put_f64(os, u.grid.hbar);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            put_f64(os, u.matrix(i, j).real());
            put_f64(os, u.matrix(i, j).imag());
        }
}

UnitaryPropagator load_propagator(const std::filesystem::path& path) {
    auto is = open_in(path, true);
    char magic[8];
    is.read(magic, 8);
    if (std::memcmp(magic, "SNPROP01", 8) != 0)
        throw ConfigError("load_propagator: bad magic in " + path.string());
    UnitaryPropagator u;
    const std::int64_t n = get_i64(is);
    u.period = get_f64(is);
    u.slices = static_cast<int>(get_i64(is));
    u.grid.q_min = get_f64(is);
    u.grid.q_max = get_f64(is);
    u.grid.hbar = get_f64(is);
    u.grid.n_points = static_cast<int>(n);
    u.matrix.resize(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            const double re = get_f64(is);
            const double im = get_f64(is);
            u.matrix(i, j) = Complex(re, im);
        }
    if (!is) throw ConfigError("load_propagator: truncated file");
    return u;
}

void save_field(const std::filesystem::path& path, const PhaseSpaceField& f) {
    auto os = open_out(path, true);
    os.write("SNFLD001", 8);
    put_i64(os, f.kind == FieldKind::WignerDiagonal ? 0 : 1);
    put_f64(os, f.time);
    put_i64(os, static_cast<std::int64_t>(f.q_axis.size()));
    put_i64(os, static_cast<std::int64_t>(f.p_axis.size()));
    for (double q : f.q_axis) put_f64(os, q);
    for (double p : f.p_axis) put_f64(os, p);
    for (std::size_t iq = 0; iq < f.q_axis.size(); ++iq)
        for (std::size_t ip = 0; ip < f.p_axis.size(); ++ip)
            put_f64(os, f.values(iq, ip));
}

PhaseSpaceField load_field(const std::filesystem::path& path) {
    auto is = open_in(path, true);
    char magic[8];
    is.read(magic, 8);
    if (std::memcmp(magic, "SNFLD001", 8) != 0)
        throw ConfigError("load_field: bad magic in " + path.string());
    PhaseSpaceField f;
    f.kind = get_i64(is) == 0 ? FieldKind::WignerDiagonal
                              : FieldKind::LiouvilleDiagonal;
    f.time = get_f64(is);
    const auto nq = get_i64(is);
    const auto np = get_i64(is);
    f.q_axis.resize(nq);
    f.p_axis.resize(np);
    for (auto& q : f.q_axis) q = get_f64(is);
    for (auto& p : f.p_axis) p = get_f64(is);
    f.values.resize(nq, np);
    for (std::int64_t iq = 0; iq < nq; ++iq)
        for (std::int64_t ip = 0; ip < np; ++ip) f.values(iq, ip) = get_f64(is);
    if (!is) throw ConfigError("load_field: truncated file");
    return f;
}

json to_json(const ModelParams& p) {
    return json{{"m", p.m},         {"omega0", p.omega0},
                {"Omega", p.Omega}, {"E_b", p.E_b},
                {"S", p.S},         {"phi", p.phi},
                {"hbar_eff", p.hbar_eff}};
}

ModelParams model_from_json(const json& j) {
    ModelParams p;
    try {
        p.m = j.value("m", 1.0);
        p.omega0 = j.value("omega0", 1.0);
        p.Omega = j.value("Omega", 0.95);
        p.E_b = j.value("E_b", 100.0);
        p.S = j.value("S", 0.0);
        p.phi = j.value("phi", kPi / 3.0);
        p.hbar_eff = j.value("hbar_eff", 1.0);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("model config: ") + e.what());
    }
    p.validate();
    return p;
}

json to_json(const EnsembleSpec& s) {
    return json{{"kind", to_string(s.kind)},
                {"dim", s.dim},
                {"realizations", s.realizations},
                {"seed", s.seed}};
}

EnsembleSpec ensemble_from_json(const json& j) {
    EnsembleSpec s;
    try {
        s.kind = ensemble_kind_from_string(j.value("kind", "goe"));
        s.dim = j.value("dim", 1000);
        s.realizations = j.value("realizations", 1);
        s.seed = j.value("seed", std::uint64_t{0});
    } catch (const json::exception& e) {
        throw ConfigError(std::string("ensemble config: ") + e.what());
    }
    s.validate();
    return s;
}

}  // namespace specnoise

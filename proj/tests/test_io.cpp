#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "specnoise/io.hpp"
#include "specnoise/pipeline.hpp"
#include "specnoise/rng.hpp"

using namespace specnoise;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("io");

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("specnoise_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("doubles are written with 17 significant digits") {
    const double x = 0.1234567890123456789;
    const std::string s = format_g17(x);
    CHECK(std::stod(s) == x);  // lossless round-trip
    CHECK(format_g17(1.0) == "1");
    CHECK(format_g17(kPi) == "3.1415926535897931");
}

TEST_CASE("csv writer emits header plus aligned columns") {
    TempDir tmp;
    const fs::path f = tmp.path / "t.csv";
    write_csv(f, {"a", "b"}, {{1.0, 2.0}, {3.5, 4.5}});
    std::ifstream in(f);
    std::string line;
    std::getline(in, line);
    CHECK(line == "a,b");
    std::getline(in, line);
    CHECK(line == "1,3.5");
    std::getline(in, line);
    CHECK(line == "2,4.5");

    CHECK_THROWS_AS(write_csv(f, {"a"}, {{1.0}, {2.0}}), ConfigError);
}

TEST_CASE("propagator binary container round-trips bit-exactly") {
    TempDir tmp;
    UnitaryPropagator u;
    u.grid = Grid{-7.5, 7.5, 32, 2.0};
    u.period = 6.6134;
    u.slices = 512;
    auto rng = make_rng(1, 0);
    std::normal_distribution<double> gauss;
    u.matrix.resize(32, 32);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            u.matrix(i, j) = Complex(gauss(rng), gauss(rng));

    const fs::path f = tmp.path / "u.bin";
    save_propagator(f, u);
    UnitaryPropagator v = load_propagator(f);
    CHECK(v.period == u.period);
    CHECK(v.slices == u.slices);
    CHECK(v.grid.q_min == u.grid.q_min);
    CHECK(v.grid.q_max == u.grid.q_max);
    CHECK(v.grid.hbar == u.grid.hbar);
    CHECK(v.grid.n_points == 32);
    CHECK((v.matrix - u.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("field binary container round-trips bit-exactly") {
    TempDir tmp;
    PhaseSpaceField f;
    f.kind = FieldKind::LiouvilleDiagonal;
    f.time = 3.25;
    f.q_axis = {-1.0, 0.0, 1.0};
    f.p_axis = {-2.0, 2.0};
    f.values.resize(3, 2);
    f.values << 1.0, 2.0, 3.0, 4.0, 5.0, 6.0;

    const fs::path path = tmp.path / "f.bin";
    save_field(path, f);
    PhaseSpaceField g = load_field(path);
    CHECK(g.kind == f.kind);
    CHECK(g.time == f.time);
    CHECK(g.q_axis == f.q_axis);
    CHECK(g.p_axis == f.p_axis);
    CHECK((g.values - f.values).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("corrupted magic bytes are rejected") {
    TempDir tmp;
    const fs::path f = tmp.path / "bad.bin";
    std::ofstream(f, std::ios::binary) << "NOTMAGIC garbage";
    CHECK_THROWS_AS(load_propagator(f), ConfigError);
    CHECK_THROWS_AS(load_field(f), ConfigError);
}

TEST_CASE("model parameters round-trip through json") {
    ModelParams p;
    p.S = 2.5;
    p.hbar_eff = 4.0;
    p.Omega = 0.9;
    ModelParams q = model_from_json(to_json(p));
    CHECK(q.m == p.m);
    CHECK(q.omega0 == p.omega0);
    CHECK(q.Omega == p.Omega);
    CHECK(q.E_b == p.E_b);
    CHECK(q.S == p.S);
    CHECK(q.phi == p.phi);
    CHECK(q.hbar_eff == p.hbar_eff);

    // defaults fill missing fields; invalid values are rejected
    ModelParams d = model_from_json(json::object());
    CHECK(d.Omega == doctest::Approx(0.95));
    CHECK_THROWS_AS(model_from_json(json{{"E_b", -3.0}}), ConfigError);
}

TEST_CASE("ensemble and run configs round-trip through json") {
    EnsembleSpec s{EnsembleKind::Gue, 500, 20, 42};
    EnsembleSpec t = ensemble_from_json(to_json(s));
    CHECK(t.kind == s.kind);
    CHECK(t.dim == s.dim);
    CHECK(t.realizations == s.realizations);
    CHECK(t.seed == s.seed);

    RunConfig c;
    c.pipeline = Pipeline::FloquetAlpha;
    c.model.S = 10.0;
    c.e_max = 1234.0;
    c.n_points = 2048;
    c.window_len = 128;
    c.seed = 99;
    c.out_dir = "somewhere";
    RunConfig d = runconfig_from_json(to_json(c));
    CHECK(to_json(d) == to_json(c));  // full fixed point
}

TEST_CASE("pipeline names round-trip and bad ones are rejected") {
    for (auto p : {Pipeline::FloquetAlpha, Pipeline::RmtAlpha,
                   Pipeline::FormFactor, Pipeline::PhaseSpace})
        CHECK(pipeline_from_string(to_string(p)) == p);
    CHECK_THROWS_AS(pipeline_from_string("bogus"), ConfigError);
}

TEST_SUITE_END();

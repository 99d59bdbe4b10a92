#include <doctest.h>

#include <cmath>
#include <random>

#include "specnoise/grid.hpp"
#include "specnoise/linalg.hpp"
#include "specnoise/model.hpp"

using namespace specnoise;

TEST_SUITE_BEGIN("model");

TEST_CASE("potential at the origin vanishes for S=0") {
    ModelParams p;
    CHECK(potential(0.0, 0.0, p) == 0.0);
    CHECK(potential(0.0, 17.3, p) == 0.0);
}

TEST_CASE("well minima sit at depth -E_b") {
    ModelParams p;  // m=1, omega0=1, E_b=100
    const double qw = std::sqrt(800.0);
    CHECK(p.q_well() == doctest::Approx(qw).epsilon(1e-14));
    CHECK(potential(qw, 0.0, p) == doctest::Approx(-100.0).epsilon(1e-12));
    CHECK(potential(-qw, 0.0, p) == doctest::Approx(-100.0).epsilon(1e-12));
    // minima: potential is larger on both sides
    CHECK(potential(qw * 1.01, 0.0, p) > -100.0);
    CHECK(potential(qw * 0.99, 0.0, p) > -100.0);
}

TEST_CASE("driven potential evaluates term by term") {
    ModelParams p;
    p.S = 2.5;
    p.phi = kPi / 3.0;
    // -1/4 + 1/6400 + 2.5*cos(pi/3)
    const double expected = -0.25 + 1.5625e-4 + 1.25;
    CHECK(potential(1.0, 0.0, p) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("force vanishes at stationary points") {
    ModelParams p;
    CHECK(force(0.0, 0.0, p) == 0.0);
    CHECK(force(p.q_well(), 3.0, p) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("force matches central differences at random points") {
    ModelParams p;
    p.S = 2.5;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uq(-40.0, 40.0);
    std::uniform_real_distribution<double> ut(0.0, 10.0 * p.period());
    const double h = 1e-5;
    for (int i = 0; i < 1000; ++i) {
        const double q = uq(rng), t = ut(rng);
        const double fd =
            -(potential(q + h, t, p) - potential(q - h, t, p)) / (2 * h);
        const double f = force(q, t, p);
        const double scale = std::max(1.0, std::abs(f));
        CHECK(std::abs(f - fd) / scale < 1e-6);
    }
}

TEST_CASE("generalized parity V(q,t) = V(-q, t + pi/Omega) at phi = 0") {
    ModelParams p;
    p.S = 7.0;
    p.phi = 0.0;
    for (double q = -30.0; q <= 30.0; q += 3.7)
        for (double t = 0.0; t < 2.0 * p.period(); t += 0.31)
            CHECK(potential(q, t, p) ==
                  doctest::Approx(potential(-q, t + kPi / p.Omega, p))
                      .epsilon(1e-12));
}

TEST_CASE("parameter validation rejects non-positive values") {
    ModelParams p;
    p.m = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = ModelParams{};
    p.E_b = -1.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = ModelParams{};
    p.S = -0.5;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    p = ModelParams{};
    p.Omega = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
    CHECK_NOTHROW(ModelParams{}.validate());
}

TEST_CASE("static hamiltonian is hermitian and has the right ground state") {
    ModelParams p;
    Grid g = build_grid(p, 50.0, 512);
    MatC h = static_hamiltonian(p, g);
    CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);

    VecD ev = eigvals_hermitian(h);
    // harmonic approximation about the minima: E0 = -E_b + hbar*omega0/2
    CHECK(ev[0] == doctest::Approx(-99.5).epsilon(1e-3));

    // low-lying levels come in tunnelling doublets split far below hbar*omega0
    for (int d = 0; d < 10; ++d) {
        const double split = ev[2 * d + 1] - ev[2 * d];
        CHECK(split < 0.05);  // << hbar omega0 = 1
    }
    // consecutive doublets are separated by roughly hbar omega0
    CHECK(ev[2] - ev[0] == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("static spectrum is converged at 512 points for the lowest levels") {
    ModelParams p;
    Grid g1 = build_grid(p, 50.0, 512);
    Grid g2 = build_grid(p, 50.0, 1024);
    VecD e1 = eigvals_hermitian(static_hamiltonian(p, g1));
    VecD e2 = eigvals_hermitian(static_hamiltonian(p, g2));
    for (int i = 0; i < 100; ++i) CHECK(std::abs(e1[i] - e2[i]) < 1e-8);
}

TEST_CASE("harmonic test hook replaces the double well") {
    ModelParams p;
    p.harmonic_only = true;
    CHECK(potential(2.0, 0.0, p) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(force(2.0, 0.0, p) == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_SUITE_END();

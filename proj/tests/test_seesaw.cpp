#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pom/bell.hpp"
#include "pom/seesaw.hpp"

using namespace pom;

namespace {

double bound(int n) { return std::ldexp(1.0, n - 1) * std::sqrt(static_cast<double>(n)); }

}  // namespace

TEST_CASE("canonical setup is a fixed point of the objective") {
    for (int n : {2, 3, 4}) {
        const MeasurementSetup setup = canonical_setup(n);
        const double before = bell_value(setup);
        const MeasurementSetup stepped = seesaw_step(setup);
        const double after = bell_value(stepped);
        CHECK(before == doctest::Approx(bound(n)).epsilon(1e-12));
        CHECK(std::abs(after - before) <= 1e-10);
    }
}

TEST_CASE("one step lifts a flat start off the floor") {
    MeasurementSetup setup = canonical_setup(3);
    for (Observable& a : setup.alice) a.matrix = ComplexMatrix::identity(2);
    const MeasurementSetup stepped = seesaw_step(setup);
    CHECK(bell_value(stepped) > 0.0);
}

TEST_CASE("objective is monotone along random runs") {
    Xoshiro256pp rng(717171);
    for (int n : {2, 3}) {
        for (int rep = 0; rep < 10; ++rep) {
            MeasurementSetup current = random_setup(n, 2, 2, rng, StateKind::Canonical);
            double value = bell_value(current);
            for (int iter = 0; iter < 25; ++iter) {
                current = seesaw_step(current);
                const double next_value = bell_value(current);
                CHECK(next_value >= value - 1e-10);
                value = next_value;
            }
            CHECK(value <= bound(n) + 1e-8);
        }
    }
}

TEST_CASE("updated observables stay involutions") {
    Xoshiro256pp rng(828282);
    MeasurementSetup current = random_setup(3, 2, 2, rng, StateKind::Canonical);
    for (int iter = 0; iter < 5; ++iter) {
        current = seesaw_step(current);
        for (const Observable& a : current.alice) CHECK(is_valid_observable(a, 1e-10));
        for (const Observable& b : current.bob) CHECK(is_valid_observable(b, 1e-10));
        CHECK(std::abs(current.state.norm() - 1.0) <= 1e-10);
    }
}

TEST_CASE("runs recover the quantum bound at qubit dimension") {
    for (int n : {2, 3}) {
        SeesawConfig config;
        config.n = n;
        config.dim = 2;
        config.restarts = 5;
        config.seed = 11;
        const SeesawTrace trace = seesaw_run(config);
        REQUIRE(!trace.objectives.empty());
        CHECK(trace.objectives.back() == doctest::Approx(bound(n)).epsilon(1e-7));
        CHECK(trace.converged);
    }
}

TEST_CASE("best setup is playable end to end") {
    SeesawConfig config;
    config.n = 2;
    config.dim = 2;
    config.restarts = 3;
    config.seed = 5;
    const SeesawTrace trace = seesaw_run(config);
    // the returned setup reproduces the reported objective
    CHECK(bell_value(trace.setup) == doctest::Approx(trace.objectives.back()).epsilon(1e-10));
    const SOSCertificate cert = sos_certificate(trace.setup);
    CHECK(cert.residual <= 1e-10);
}

TEST_CASE("restart streams are deterministic") {
    SeesawConfig config;
    config.n = 2;
    config.dim = 2;
    config.restarts = 2;
    config.seed = 123;
    const SeesawTrace a = seesaw_run(config);
    const SeesawTrace b = seesaw_run(config);
    REQUIRE(a.objectives.size() == b.objectives.size());
    for (std::size_t i = 0; i < a.objectives.size(); ++i) CHECK(a.objectives[i] == b.objectives[i]);
}

TEST_CASE("default dimension rounds the bit count up") {
    SeesawConfig config;
    config.n = 3;
    config.restarts = 1;
    config.max_iterations = 3;
    const SeesawTrace trace = seesaw_run(config);
    CHECK(trace.setup.state.dim_a == 4);  // 2^ceil(3/2)
}

TEST_CASE("bad configurations are rejected") {
    SeesawConfig config;
    config.n = 3;
    config.dim = 3;  // not a power of two
    CHECK_THROWS_AS(seesaw_run(config), std::invalid_argument);
    config.dim = 2;
    config.restarts = 0;
    CHECK_THROWS_AS(seesaw_run(config), std::invalid_argument);
}

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "harvest/model.hpp"
#include "oracles.hpp"

using harvest::InitialData;
using harvest::logistic_flow;
using harvest::ModelParams;

TEST_SUITE("model") {

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(harvest::validate(ModelParams{1.0, 500.0, 1.0, 0.5, 2}));
    CHECK_THROWS_AS(harvest::validate(ModelParams{0.0, 500.0, 1.0, 0.5, 2}), std::invalid_argument);
    CHECK_THROWS_AS(harvest::validate(ModelParams{1.0, -1.0, 1.0, 0.5, 2}), std::invalid_argument);
    CHECK_THROWS_AS(harvest::validate(ModelParams{1.0, 500.0, 0.0, 0.5, 2}), std::invalid_argument);
    CHECK_THROWS_AS(harvest::validate(ModelParams{1.0, 500.0, 1.0, 0.0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(harvest::validate(ModelParams{1.0, 500.0, 1.0, 1.0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(harvest::validate(ModelParams{1.0, 500.0, 1.0, 0.5, -1}), std::invalid_argument);
}

TEST_CASE("initial data validation") {
    CHECK_NOTHROW(harvest::validate(InitialData{100.0, {140.0, 120.0}}, 2));
    CHECK_NOTHROW(harvest::validate(InitialData{0.0, {}}, 0));
    CHECK_THROWS_AS(harvest::validate(InitialData{-1.0, {}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(harvest::validate(InitialData{1.0, {2.0}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(harvest::validate(InitialData{1.0, {-2.0}}, 1), std::invalid_argument);
}

TEST_CASE("carrying capacity and zero are fixed points") {
    const ModelParams p{0.7, 350.0, 2.0, 0.5, 0};
    CHECK(logistic_flow(p.K_c, p, p.T) == doctest::Approx(p.K_c).epsilon(1e-12));
    CHECK(logistic_flow(0.0, p, 1.3) == 0.0);
}

TEST_CASE("flow matches direct integration of the growth law") {
    const ModelParams p{1.0, 500.0, 1.0, 0.5, 0};
    const double via_formula = logistic_flow(100.0, p, 1.0);
    const double via_rk4 = oracles::integrate_logistic(100.0, p.r, p.K_c, 1.0);
    CHECK(via_formula == doctest::Approx(via_rk4).epsilon(1e-10));
    CHECK(via_formula == doctest::Approx(202.30483759584484).epsilon(1e-13));
    CHECK(std::abs(via_formula - 202.31) < 0.01);

    // a second parameter set, integrated from above the capacity
    const ModelParams q{0.8, 120.0, 2.5, 0.5, 0};
    CHECK(logistic_flow(300.0, q, 1.7) ==
          doctest::Approx(oracles::integrate_logistic(300.0, q.r, q.K_c, 1.7)).epsilon(1e-10));
}

TEST_CASE("dt = 0 is the bit-exact identity") {
    const ModelParams p{1.3747, 307.1609, 1.0, 0.4971, 1};
    for (double x : {0.0, 1e-9, 102.7816, 307.1609, 614.0}) {
        CHECK(logistic_flow(x, p, 0.0) == x);
    }
}

TEST_CASE("domain errors") {
    const ModelParams p{1.0, 500.0, 1.0, 0.5, 0};
    CHECK_THROWS_AS(logistic_flow(-1.0, p, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(logistic_flow(1.0, p, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(logistic_flow(1.0, p, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(logistic_flow(std::nan(""), p, 0.5), std::invalid_argument);
}

TEST_CASE("semigroup property") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p{oracles::uniform(rng, 0.1, 3.0), oracles::uniform(rng, 10.0, 1000.0),
                            oracles::uniform(rng, 0.2, 4.0), 0.5, 0};
        const double x = oracles::uniform(rng, 0.0, 2.0 * p.K_c);
        const double s = oracles::uniform(rng, 0.0, p.T);
        const double t = oracles::uniform(rng, 0.0, p.T - s);
        const double split = logistic_flow(logistic_flow(x, p, s), p, t);
        const double whole = logistic_flow(x, p, s + t);
        CHECK(split == doctest::Approx(whole).epsilon(1e-12));
    }
}

TEST_CASE("monotonicity in x") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p{oracles::uniform(rng, 0.1, 3.0), oracles::uniform(rng, 10.0, 1000.0),
                            oracles::uniform(rng, 0.2, 4.0), 0.5, 0};
        double x1 = oracles::uniform(rng, 0.0, 2.0 * p.K_c);
        double x2 = oracles::uniform(rng, 0.0, 2.0 * p.K_c);
        if (x1 == x2) continue;
        if (x1 > x2) std::swap(x1, x2);
        const double dt = oracles::uniform(rng, 0.0, p.T);
        CHECK(logistic_flow(x1, p, dt) < logistic_flow(x2, p, dt));
    }
}

TEST_CASE("growth direction relative to the capacity") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p{oracles::uniform(rng, 0.1, 3.0), oracles::uniform(rng, 10.0, 1000.0),
                            oracles::uniform(rng, 0.2, 4.0), 0.5, 0};
        const double dt = oracles::uniform(rng, 1e-3, p.T);
        const double below = oracles::uniform(rng, 1e-6, 1.0) * p.K_c * 0.999;
        const double above = p.K_c * (1.0 + oracles::uniform(rng, 1e-3, 3.0));
        CHECK(logistic_flow(below, p, dt) > below);
        CHECK(logistic_flow(above, p, dt) < above);
        CHECK(logistic_flow(below, p, dt) <= p.K_c);
    }
}

}  // TEST_SUITE

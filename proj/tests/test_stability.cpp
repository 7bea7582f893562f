#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "harvest/orbit.hpp"
#include "harvest/stability.hpp"
#include "harvest/yield.hpp"
#include "oracles.hpp"

using harvest::classify;
using harvest::classify_general;
using harvest::EmpiricalVerdict;
using harvest::linearization;
using harvest::ModelParams;
using harvest::oracle_stability;
using harvest::positive_equilibrium;
using harvest::solve_theta_star;
using harvest::StabilityClass;
using harvest::sufficient_stable;

namespace {

const ModelParams kFig1Left{1.0, 500.0, 1.0, 0.3934693402873666, 2};
const ModelParams kFig1Right{2.1, 500.0, 1.0, 0.6500622508888447, 2};
const ModelParams kFig2{1.3747, 307.1609, 1.0, 0.4971, 1};

ModelParams grid_params(double rT, double E, int k) { return {rT, 1.0, 1.0, E, k}; }

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("equilibrium value at reported parameters") {
    const auto x_star = positive_equilibrium(kFig2);
    REQUIRE(x_star.has_value());
    CHECK(*x_star == doctest::Approx(102.78017061377263).epsilon(1e-13));
    // reported with ~4 printed decimals and a rounded growth rate upstream
    CHECK(std::abs(*x_star - 102.7816) < 2e-3);
}

TEST_CASE("equilibrium vanishes exactly at the existence boundary") {
    for (double E : {0.3, 0.4971, 0.5, 0.8}) {
        const double rT = -std::log1p(-E);
        CHECK_FALSE(positive_equilibrium(ModelParams{rT, 500.0, 1.0, E, 1}).has_value());
        CHECK_FALSE(positive_equilibrium(ModelParams{rT * 0.999, 500.0, 1.0, E, 1}).has_value());
        CHECK(positive_equilibrium(ModelParams{rT * 1.001, 500.0, 1.0, E, 1}).has_value());
    }
}

TEST_CASE("equilibrium at optimal effort matches the closed form") {
    const double E_opt = harvest::optimal_effort(1.0, 1.0);
    const ModelParams p{1.0, 500.0, 1.0, E_opt, 0};
    const auto x_star = positive_equilibrium(p);
    REQUIRE(x_star.has_value());
    CHECK(*x_star == doctest::Approx(500.0 / (std::exp(0.5) + 1.0)).epsilon(1e-13));
    CHECK(*x_star == doctest::Approx(188.7703343990727).epsilon(1e-13));

    // independent route: fixed-point iteration of the k = 0 recurrence
    double z = p.K_c / 2.0;
    for (int i = 0; i < 400; ++i) z = harvest::step(p, z, z);
    CHECK(*x_star == doctest::Approx(z).epsilon(1e-10));
}

TEST_CASE("equilibrium lies in (0, K_c) and is a fixed point of step") {
    std::mt19937_64 rng(314);
    int found = 0;
    while (found < 50) {
        ModelParams p;
        p.T = oracles::uniform(rng, 0.5, 2.0);
        p.r = oracles::uniform(rng, 0.1, 3.0) / p.T;
        p.K_c = oracles::uniform(rng, 10.0, 1000.0);
        p.E = oracles::uniform(rng, 0.05, 0.95);
        p.k = static_cast<int>(rng() % 4);
        const auto x_star = positive_equilibrium(p);
        if (!x_star) continue;
        ++found;
        CHECK(*x_star > 0.0);
        CHECK(*x_star < p.K_c);
        CHECK(harvest::step(p, *x_star, *x_star) == doctest::Approx(*x_star).epsilon(1e-10));
    }
}

TEST_CASE("linearization coefficients") {
    const harvest::LinearizationCoefficients lin =
        linearization(grid_params(1.0, 0.3, 1));
    CHECK(lin.p0 == doctest::Approx(0.7507743697376374).epsilon(1e-14));
    CHECK(lin.pk == doctest::Approx(0.22523231092129123).epsilon(1e-14));
    CHECK(lin.pk == doctest::Approx(0.3 * lin.p0).epsilon(1e-14));

    // at optimal effort the leading coefficient collapses to one
    const double E_opt = harvest::optimal_effort(1.7, 1.0);
    const auto opt = linearization(ModelParams{1.7, 100.0, 1.0, E_opt, 3});
    CHECK(opt.p0 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(opt.pk == doctest::Approx(E_opt).epsilon(1e-13));

    CHECK_THROWS_AS(linearization(grid_params(1.0, 0.7, 1)), std::domain_error);
}

TEST_CASE("linearization agrees with a numerical jacobian of step") {
    for (const auto& p : {grid_params(1.0, 0.3, 1), grid_params(0.8, 0.45, 3),
                          ModelParams{1.3, 420.0, 1.0, 0.35, 2}}) {
        const double x_star = positive_equilibrium(p).value();
        const auto lin = linearization(p);
        const double h = x_star * 1e-6;
        const double d_dxn = oracles::central_difference(
            [&](double x) { return harvest::step(p, x, x_star); }, x_star, h);
        const double d_dlag = oracles::central_difference(
            [&](double x) { return harvest::step(p, x_star, x); }, x_star, h);
        CHECK(d_dxn == doctest::Approx(lin.p0).epsilon(1e-6));
        CHECK(-d_dlag == doctest::Approx(lin.pk).epsilon(1e-6));
    }
}

TEST_CASE("theta root at unit p0 hits the sine supplement angles") {
    CHECK(solve_theta_star(1.0, 2) == doctest::Approx(std::numbers::pi / 5).epsilon(1e-12));
    CHECK(solve_theta_star(1.0, 1) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-12));
}

TEST_CASE("theta root confirmed by dense-grid bracketing") {
    const double p0 = 0.9;
    const int k = 3;
    const double theta = solve_theta_star(p0, k);
    const double residual =
        std::abs(std::sin(k * theta) / std::sin((k + 1) * theta) - 1.0 / p0);
    CHECK(residual < 1e-12);
    const double hi = std::numbers::pi / (k + 1);
    const double bracket = oracles::grid_root(
        [&](double t) { return std::sin(k * t) - (1.0 / p0) * std::sin((k + 1) * t); },
        hi * 1e-9, hi * (1.0 - 1e-9));
    CHECK(std::abs(theta - bracket) < hi / 1e6);
}

TEST_CASE("theta root properties over a coefficient grid") {
    for (int k = 1; k <= 6; ++k) {
        const double cap = static_cast<double>(k + 1) / k;
        for (double frac : {0.15, 0.3, 0.5, 0.7, 0.85, 0.97, 0.999}) {
            const double p0 = cap * frac;
            const double theta = solve_theta_star(p0, k);
            CHECK(theta > 0.0);
            CHECK(theta < std::numbers::pi / (k + 1));
            const double residual =
                std::abs(std::sin(k * theta) / std::sin((k + 1) * theta) - 1.0 / p0);
            CHECK(residual < 1e-12);
        }
    }
}

TEST_CASE("theta root requires p0 below (k+1)/k") {
    CHECK_THROWS_AS(solve_theta_star(1.5, 2), std::domain_error);
    CHECK_THROWS_AS(solve_theta_star(2.0, 1), std::domain_error);
    CHECK_THROWS_AS(solve_theta_star(-1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(solve_theta_star(0.9, 0), std::invalid_argument);
}

TEST_CASE("classification of the reported simulation parameters") {
    CHECK(classify(kFig1Left).cls == StabilityClass::Stable);
    CHECK(classify(kFig1Right).cls == StabilityClass::Unstable);
    CHECK(classify(kFig2).cls == StabilityClass::Stable);
    const auto v = classify(kFig1Left);
    REQUIRE(v.theta_star.has_value());
    CHECK(*v.theta_star > 0.0);
    CHECK(*v.theta_star < std::numbers::pi / 3);
}

TEST_CASE("k = 1 threshold splits stable from unstable") {
    CHECK(classify(grid_params(1.1, 0.6, 1)).cls == StabilityClass::Unstable);
    CHECK(classify(grid_params(1.5, 0.6, 1)).cls == StabilityClass::Stable);
    // boundary value for E = 0.6 is rT = 1.32176
    CHECK(classify(grid_params(1.3217, 0.6, 1)).cls == StabilityClass::Unstable);
    CHECK(classify(grid_params(1.3218, 0.6, 1)).cls == StabilityClass::Stable);
}

TEST_CASE("no positive equilibrium below the existence threshold") {
    for (int k : {0, 1, 2, 5}) {
        const auto v = classify(grid_params(1.0, 0.7, k));  // 1 <= -ln(0.3) = 1.204
        CHECK(v.cls == StabilityClass::NoPositiveEquilibrium);
        CHECK_FALSE(v.equilibrium.has_value());
        CHECK(v.margin < 0.0);
    }
}

TEST_CASE("k = 0 is stable whenever the equilibrium exists") {
    std::mt19937_64 rng(11);
    int found = 0;
    while (found < 50) {
        const double rT = oracles::uniform(rng, 0.05, 3.0);
        const double E = oracles::uniform(rng, 0.05, 0.95);
        const auto v = classify(grid_params(rT, E, 0));
        if (v.cls == StabilityClass::NoPositiveEquilibrium) continue;
        ++found;
        CHECK(v.cls == StabilityClass::Stable);
        CHECK(v.margin > 0.0);
        CHECK_FALSE(v.theta_star.has_value());
    }
}

TEST_CASE("exact boundary points classify as marginal") {
    // k = 1: rT placed exactly on the closed-form threshold
    const double E = 0.6;
    const double rT = std::log(E) - 2.0 * std::log1p(-E);
    CHECK(classify(grid_params(rT, E, 1)).cls == StabilityClass::Marginal);

    // k = 2: optimal effort exactly at the sustainability bound
    const double bound = harvest::msy_rt_bound(2);
    const double E_opt = harvest::optimal_effort(bound, 1.0);
    const auto v = classify(grid_params(bound, E_opt, 2));
    CHECK(v.cls == StabilityClass::Marginal);
    CHECK(std::abs(v.margin) < 1e-9);
}

TEST_CASE("sufficient condition examples") {
    CHECK(sufficient_stable(grid_params(1.0, 0.3, 4)));
    CHECK(classify(grid_params(1.0, 0.3, 4)).cls == StabilityClass::Stable);
    CHECK_FALSE(sufficient_stable(grid_params(0.9, 0.3, 4)));
    // threshold at E = 0.01 sits near rT = 0.0301
    CHECK(sufficient_stable(grid_params(0.0302, 0.01, 2)));
    CHECK_FALSE(sufficient_stable(grid_params(0.0300, 0.01, 2)));
}

TEST_CASE("sufficiency implies the sharp verdict is stable") {
    for (int k = 1; k <= 5; ++k)
        for (double rT = 0.3; rT < 3.05; rT += 0.1)
            for (double E = 0.05; E < 0.92; E += 0.05)
                if (sufficient_stable(grid_params(rT, E, k)))
                    CHECK(classify(grid_params(rT, E, k)).cls == StabilityClass::Stable);
}

TEST_CASE("effort at or below one half is stable for k = 1") {
    for (double rT = 0.1; rT < 3.05; rT += 0.1)
        for (double E = 0.05; E <= 0.5 + 1e-12; E += 0.05) {
            const auto v = classify(grid_params(rT, E, 1));
            if (v.cls != StabilityClass::NoPositiveEquilibrium)
                CHECK(v.cls == StabilityClass::Stable);
        }
}

TEST_CASE("the explicit k = 1 branch matches the general sharp test") {
    for (double rT = 0.3; rT < 3.05; rT += 0.1)
        for (double E = 0.05; E < 0.92; E += 0.05) {
            const auto a = classify(grid_params(rT, E, 1));
            const auto b = classify_general(grid_params(rT, E, 1));
            CHECK(a.cls == b.cls);
        }
    CHECK_THROWS_AS(classify_general(grid_params(1.0, 0.5, 0)), std::invalid_argument);
}

TEST_CASE("stability boundary at optimal effort matches the closed-form bound") {
    for (int k = 2; k <= 4; ++k) {
        double lo = 0.2, hi = 4.0;  // margin positive at lo, negative at hi
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double E_opt = harvest::optimal_effort(mid, 1.0);
            (classify(grid_params(mid, E_opt, k)).margin > 0.0 ? lo : hi) = mid;
        }
        CHECK(0.5 * (lo + hi) == doctest::Approx(harvest::msy_rt_bound(k)).epsilon(1e-9));
    }
}

TEST_CASE("empirical oracle agrees on the reported parameter sets") {
    CHECK(oracle_stability(kFig1Left) == EmpiricalVerdict::Stable);
    CHECK(oracle_stability(kFig1Right) == EmpiricalVerdict::Unstable);
    CHECK(oracle_stability(kFig2) == EmpiricalVerdict::Stable);
    CHECK_THROWS_AS(oracle_stability(grid_params(1.0, 0.7, 2)), std::domain_error);
    CHECK_THROWS_AS(oracle_stability(kFig2, 0.2), std::invalid_argument);
}

TEST_CASE("empirical oracle agrees with the sharp test away from boundaries") {
    for (int k : {1, 2, 3})
        for (double rT = 0.3; rT < 3.05; rT += 0.3)
            for (double E : {0.1, 0.25, 0.4, 0.55, 0.7, 0.85}) {
                const auto v = classify(grid_params(rT, E, k));
                if (std::abs(v.margin) < 0.02) continue;
                if (v.cls != StabilityClass::Stable && v.cls != StabilityClass::Unstable)
                    continue;
                const auto e = oracle_stability(grid_params(rT, E, k));
                if (e == EmpiricalVerdict::Inconclusive) continue;
                const bool analytic_stable = v.cls == StabilityClass::Stable;
                CHECK(analytic_stable == (e == EmpiricalVerdict::Stable));
            }
}

}  // TEST_SUITE

#include "harvest/orbit.hpp"

#include <cmath>
#include <stdexcept>

namespace harvest {

namespace {

// F(x, e^{rT}) with the growth factor precomputed once per orbit.
inline double flow_over_period(double x, double K_c, double growth_m1) {
    return K_c * (1.0 + growth_m1) * x / (K_c + x * growth_m1);
}

// Shared recurrence driver. `values` holds the startup window on entry.
Orbit run_recurrence(const ModelParams& p, std::vector<double> values,
                     const StoppingRule& rule) {
    const double growth_m1 = std::expm1(p.r * p.T);
    const std::size_t lag = static_cast<std::size_t>(p.k);

    Orbit orbit;
    orbit.params_echo = p;
    orbit.values = std::move(values);
    auto& xs = orbit.values;

    for (std::size_t n = 0; n < xs.size(); ++n) {
        if (xs[n] <= rule.extinction_threshold) {
            xs.resize(n + 1);
            orbit.outcome = OrbitOutcome::Extinct;
            orbit.outcome_step = n;
            return orbit;
        }
    }

    int hits = 0;
    while (xs.size() - 1 < static_cast<std::size_t>(rule.max_periods)) {
        const std::size_t n = xs.size() - 1;
        const double raw = flow_over_period(xs[n], p.K_c, growth_m1) -
                           p.E * flow_over_period(xs[n - lag], p.K_c, growth_m1);
        const double next = raw > 0.0 ? raw : 0.0;
        xs.push_back(next);
        if (next <= rule.extinction_threshold) {
            orbit.outcome = OrbitOutcome::Extinct;
            orbit.outcome_step = xs.size() - 1;
            return orbit;
        }
        if (std::abs(next - xs[n]) / xs[n] < rule.rel_tol) {
            if (++hits >= rule.consecutive_hits) {
                orbit.outcome = OrbitOutcome::Converged;
                orbit.outcome_step = xs.size() - 1;
                orbit.limit = next;
                return orbit;
            }
        } else {
            hits = 0;
        }
    }
    orbit.outcome = OrbitOutcome::HorizonReached;
    orbit.outcome_step = xs.size() - 1;
    return orbit;
}

}  // namespace

void validate(const StoppingRule& rule) {
    if (!(rule.rel_tol > 0.0))
        throw std::invalid_argument("StoppingRule: rel_tol must be > 0");
    if (rule.consecutive_hits < 1)
        throw std::invalid_argument("StoppingRule: consecutive_hits must be >= 1");
    if (rule.max_periods < 1)
        throw std::invalid_argument("StoppingRule: max_periods must be >= 1");
    if (!(rule.extinction_threshold >= 0.0))
        throw std::invalid_argument("StoppingRule: extinction_threshold must be >= 0");
}

std::vector<double> seed_orbit(const ModelParams& p, const InitialData& init) {
    validate(p);
    validate(init, p.k);
    const double growth_m1 = std::expm1(p.r * p.T);

    std::vector<double> xs;
    xs.reserve(static_cast<std::size_t>(p.k) + 1);
    xs.push_back(init.n0_plus);
    // Deduction for x_{i+1} is E N((i-k+1)T) = E history[k-1-i]: the oldest
    // pre-history value is consumed first.
    for (int i = 0; i < p.k; ++i) {
        const double deduction = p.E * init.history[static_cast<std::size_t>(p.k - 1 - i)];
        const double raw = flow_over_period(xs.back(), p.K_c, growth_m1) - deduction;
        xs.push_back(raw > 0.0 ? raw : 0.0);
    }
    return xs;
}

double step(const ModelParams& p, double x_n, double x_lag) {
    validate(p);
    if (!(x_n >= 0.0) || !(x_lag >= 0.0))
        throw std::invalid_argument("step: populations must be >= 0");
    const double growth_m1 = std::expm1(p.r * p.T);
    const double raw = flow_over_period(x_n, p.K_c, growth_m1) -
                       p.E * flow_over_period(x_lag, p.K_c, growth_m1);
    return raw > 0.0 ? raw : 0.0;
}

Orbit iterate(const ModelParams& p, const InitialData& init, const StoppingRule& rule) {
    validate(rule);
    return run_recurrence(p, seed_orbit(p, init), rule);
}

Orbit iterate_from_window(const ModelParams& p, std::span<const double> window,
                          const StoppingRule& rule) {
    validate(p);
    validate(rule);
    if (window.size() != static_cast<std::size_t>(p.k) + 1)
        throw std::invalid_argument("iterate_from_window: window must hold k+1 values");
    for (double x : window)
        if (!(x >= 0.0))
            throw std::invalid_argument("iterate_from_window: values must be >= 0");
    return run_recurrence(p, std::vector<double>(window.begin(), window.end()), rule);
}

std::vector<TrajectoryPoint> continuous_trajectory(const ModelParams& p,
                                                   const Orbit& orbit,
                                                   int samples_per_period) {
    validate(p);
    if (samples_per_period < 1)
        throw std::invalid_argument("continuous_trajectory: samples_per_period must be >= 1");
    if (orbit.values.empty())
        throw std::invalid_argument("continuous_trajectory: empty orbit");

    std::vector<TrajectoryPoint> points;
    points.reserve(orbit.values.size() * (static_cast<std::size_t>(samples_per_period) + 1));
    for (std::size_t n = 0; n < orbit.values.size(); ++n) {
        const double t0 = static_cast<double>(n) * p.T;
        points.push_back({t0, orbit.values[n]});  // post-impulse sample, dt = 0
        for (int j = 1; j <= samples_per_period; ++j) {
            const double dt = p.T * static_cast<double>(j) / static_cast<double>(samples_per_period);
            points.push_back({t0 + dt, logistic_flow(orbit.values[n], p, dt)});
        }
    }
    return points;
}

}  // namespace harvest

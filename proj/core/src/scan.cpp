#include "harvest/scan.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "harvest/orbit.hpp"
#include "harvest/yield.hpp"

namespace harvest {

namespace {

// Uniform draw in [0, range) from explicit 53-bit mantissa scaling, so that
// streams are reproducible across standard libraries.
inline double uniform_draw(std::mt19937_64& rng, double range) {
    return range * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace

const char* to_string(BasinOutcome o) {
    switch (o) {
        case BasinOutcome::Survived: return "Survived";
        case BasinOutcome::Extinct: return "Extinct";
        case BasinOutcome::Indeterminate: return "Indeterminate";
    }
    return "?";
}

SurvivalRule SurvivalRule::for_params(const ModelParams& p) {
    SurvivalRule rule;
    rule.domain_max = 2.0 * p.K_c;
    return rule;
}

void validate(const SurvivalRule& rule) {
    if (rule.iterations < 1)
        throw std::invalid_argument("SurvivalRule: iterations must be >= 1");
    if (!(rule.window_halfwidth > 0.0))
        throw std::invalid_argument("SurvivalRule: window_halfwidth must be > 0");
    if (!(rule.extinction_threshold > 0.0))
        throw std::invalid_argument("SurvivalRule: extinction_threshold must be > 0");
    if (!(rule.domain_max > 0.0))
        throw std::invalid_argument("SurvivalRule: domain_max must be > 0");
}

BasinSample classify_basin_sample(const ModelParams& p, const SurvivalRule& rule,
                                  InitialData init) {
    validate(p);
    validate(rule);
    const auto x_star = positive_equilibrium(p);
    if (!x_star) throw std::domain_error("basin scan: no positive equilibrium");

    const double growth_m1 = std::expm1(p.r * p.T);
    const auto flow = [&](double x) {
        return p.K_c * (1.0 + growth_m1) * x / (p.K_c + x * growth_m1);
    };
    const std::size_t len = static_cast<std::size_t>(p.k) + 1;

    BasinSample sample;
    sample.initial = std::move(init);

    const std::vector<double> seeds = seed_orbit(p, sample.initial);
    const std::size_t horizon_in_seed =
        std::min(seeds.size() - 1, static_cast<std::size_t>(rule.iterations));
    long died_at = -1;
    for (std::size_t i = 0; i <= horizon_in_seed; ++i) {
        if (seeds[i] <= rule.extinction_threshold) {
            died_at = static_cast<long>(i);
            break;
        }
    }
    double last = seeds[horizon_in_seed];
    if (died_at < 0) {
        std::vector<double> window(seeds.begin(), seeds.end());
        std::size_t head = 0;  // oldest entry, the lagged value
        for (long n = p.k + 1; n <= rule.iterations; ++n) {
            const double x_lag = window[head];
            const double x_cur = window[(head + len - 1) % len];
            const double raw = flow(x_cur) - p.E * flow(x_lag);
            const double next = raw > 0.0 ? raw : 0.0;
            window[head] = next;
            head = (head + 1) % len;
            last = next;
            if (next <= rule.extinction_threshold) {
                died_at = n;
                break;
            }
        }
    }
    if (died_at >= 0) {
        sample.outcome = BasinOutcome::Extinct;
        sample.steps_run = died_at;
    } else {
        sample.outcome = std::abs(last - *x_star) <= rule.window_halfwidth
                             ? BasinOutcome::Survived
                             : BasinOutcome::Indeterminate;
        sample.steps_run = rule.iterations;
    }
    return sample;
}

std::vector<BasinSample> basin_scan(const ModelParams& p, const SurvivalRule& rule,
                                    int n_samples, std::uint64_t seed) {
    validate(p);
    validate(rule);
    if (n_samples < 1) throw std::invalid_argument("basin_scan: n_samples must be >= 1");
    if (!positive_equilibrium(p))
        throw std::domain_error("basin_scan: no positive equilibrium");

    std::mt19937_64 rng(seed);
    std::vector<BasinSample> samples;
    samples.reserve(static_cast<std::size_t>(n_samples));
    for (int s = 0; s < n_samples; ++s) {
        InitialData init;
        init.history.resize(static_cast<std::size_t>(p.k));
        for (int j = 0; j < p.k; ++j)
            init.history[static_cast<std::size_t>(j)] = uniform_draw(rng, rule.domain_max);
        init.n0_plus = uniform_draw(rng, rule.domain_max);
        samples.push_back(classify_basin_sample(p, rule, std::move(init)));
    }
    return samples;
}

std::vector<SweepCell> stability_region_sweep(const std::vector<int>& k_list,
                                              const std::vector<double>& rT_grid,
                                              const EffortRule& effort) {
    if (k_list.empty() || rT_grid.empty())
        throw std::invalid_argument("stability_region_sweep: grids must be nonempty");
    std::vector<SweepCell> cells;
    cells.reserve(k_list.size() * rT_grid.size());
    for (int k : k_list) {
        for (double rT : rT_grid) {
            if (!(rT > 0.0))
                throw std::invalid_argument("stability_region_sweep: rT must be > 0");
            const double E = effort.kind == EffortRule::Kind::Fixed
                                 ? effort.value
                                 : optimal_effort(rT, 1.0);
            // Classification depends only on (rT, E, k); scale free otherwise.
            const StabilityVerdict v = classify(ModelParams{rT, 1.0, 1.0, E, k});
            cells.push_back({k, rT, E, v.cls, v.margin});
        }
    }
    return cells;
}

std::vector<BoundRow> msy_bound_table(int k_max) {
    if (k_max < 2) throw std::invalid_argument("msy_bound_table: k_max must be >= 2");
    std::vector<BoundRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max) - 1);
    for (int k = 2; k <= k_max; ++k) {
        const double f = msy_rt_bound(k);
        rows.push_back({k, f, k * f});
    }
    return rows;
}

}  // namespace harvest

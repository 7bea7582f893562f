#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harvest/model.hpp"
#include "harvest/stability.hpp"

namespace harvest {

/// Classification protocol for one basin sample.
struct SurvivalRule {
    long iterations = 10500;           ///< horizon in harvest periods
    double window_halfwidth = 10.0;    ///< survival band around x*, absolute
    double extinction_threshold = 1e-3;
    double domain_max = 0.0;           ///< initial values drawn from [0, domain_max]

    /// Standard protocol defaults with domain [0, 2 K_c].
    static SurvivalRule for_params(const ModelParams& p);
};

void validate(const SurvivalRule& rule);

enum class BasinOutcome { Survived, Extinct, Indeterminate };

const char* to_string(BasinOutcome o);

struct BasinSample {
    InitialData initial;
    BasinOutcome outcome = BasinOutcome::Indeterminate;
    long steps_run = 0;
};

/// Generator family behind basin_scan, recorded in output metadata.
inline constexpr const char* kGeneratorName = "mt19937_64";

/// Iterates one initial condition to the horizon and classifies it:
/// Extinct once at or below the threshold, Survived inside the window
/// around x* at the horizon, Indeterminate otherwise.
BasinSample classify_basin_sample(const ModelParams& p, const SurvivalRule& rule,
                                  InitialData init);

/// Draws n_samples initial conditions uniformly from [0, domain_max]
/// (per sample: N(0), N(-T), ..., N(-(k-1)T), then N(0^+)) and classifies
/// each. Deterministic given the seed. Requires a positive equilibrium.
std::vector<BasinSample> basin_scan(const ModelParams& p, const SurvivalRule& rule,
                                    int n_samples, std::uint64_t seed);

/// Effort choice per sweep cell: a fixed value, or E_opt(rT).
struct EffortRule {
    enum class Kind { Fixed, Optimal };
    Kind kind = Kind::Optimal;
    double value = 0.0;

    static EffortRule fixed(double E) { return {Kind::Fixed, E}; }
    static EffortRule optimal() { return {Kind::Optimal, 0.0}; }
};

struct SweepCell {
    int k = 0;
    double rT = 0.0;
    double E = 0.0;
    StabilityClass verdict = StabilityClass::NoPositiveEquilibrium;
    double margin = 0.0;
};

/// One classify() verdict per (k, rT) cell; classification depends on the
/// pair (rT, E) only.
std::vector<SweepCell> stability_region_sweep(const std::vector<int>& k_list,
                                              const std::vector<double>& rT_grid,
                                              const EffortRule& effort);

struct BoundRow {
    int k = 0;
    double f_k = 0.0;
    double k_f_k = 0.0;
};

/// Rows (k, f(k), k f(k)) for k = 2..k_max.
std::vector<BoundRow> msy_bound_table(int k_max);

}  // namespace harvest

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "harvest/model.hpp"

namespace harvest {

/// Termination policy for orbit iteration.
struct StoppingRule {
    double rel_tol = 1e-4;             ///< step-to-step relative tolerance
    int consecutive_hits = 5;          ///< periods the tolerance must hold in a row
    int max_periods = 100;             ///< horizon in periods
    double extinction_threshold = 0.0; ///< at or below this the orbit is extinct
};

void validate(const StoppingRule& rule);

enum class OrbitOutcome { Extinct, Converged, HorizonReached };

/// Post-harvest sequence x_0, x_1, ... with its terminal classification.
struct Orbit {
    std::vector<double> values;
    OrbitOutcome outcome = OrbitOutcome::HorizonReached;
    /// Extinct: first index at or below the threshold. Converged: index at
    /// which the rule fired. HorizonReached: last computed index.
    std::size_t outcome_step = 0;
    /// Last iterate, set when Converged.
    std::optional<double> limit;
    ModelParams params_echo;
};

/// First k+1 post-harvest sizes: x_0 = n0_plus, then
/// x_{i+1} = max{F(x_i, e^{rT}) - E N((i-k+1)T), 0} with the raw
/// pre-history values as deductions.
std::vector<double> seed_orbit(const ModelParams& p, const InitialData& init);

/// One harvest period: max{F(x_n, e^{rT}) - E F(x_lag, e^{rT}), 0}.
double step(const ModelParams& p, double x_n, double x_lag);

/// Seeds from init, then applies step until the rule fires.
Orbit iterate(const ModelParams& p, const InitialData& init,
              const StoppingRule& rule = {});

/// Runs the recurrence from an explicit startup window x_0..x_k,
/// bypassing pre-history seeding (window.size() must be k+1).
Orbit iterate_from_window(const ModelParams& p, std::span<const double> window,
                          const StoppingRule& rule = {});

struct TrajectoryPoint {
    double t;
    double N;
};

/// Reconstructs N(t) between impulses. For each orbit index n the output
/// holds the post-impulse point (nT, x_n) followed by samples_per_period
/// points at t = nT + j T/m, ending with the pre-harvest left limit at
/// (n+1)T. The post-impulse points reproduce the orbit values bit-exactly.
std::vector<TrajectoryPoint> continuous_trajectory(const ModelParams& p,
                                                   const Orbit& orbit,
                                                   int samples_per_period);

}  // namespace harvest

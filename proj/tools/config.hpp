#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harvest/model.hpp"
#include "harvest/orbit.hpp"
#include "harvest/scan.hpp"
#include "json.hpp"

namespace harvest::cli {

struct SweepSpec {
    std::vector<int> k_list{1, 2, 3, 4, 5};
    double rT_min = 0.3;
    double rT_max = 3.0;
    double rT_step = 0.1;
    std::optional<double> fixed_effort;  // absent: optimal effort per cell
};

struct FrontierSpec {
    double rT_min = 1.0;
    double rT_max = 3.0;
    double rT_step = 0.1;
};

/// Fully resolved invocation state: defaults, overlaid by the config file,
/// overlaid by command-line flags.
struct RunConfig {
    ModelParams params;
    std::optional<InitialData> init;
    StoppingRule stopping;
    std::optional<SurvivalRule> survival;  // absent: protocol defaults with 2 K_c domain
    std::string out;
    std::string format = "csv";  // csv | json, data tables only
    std::uint64_t seed = 0;
    int samples_per_period = 25;
    int n_samples = 2000;
    SweepSpec sweep;
    int k_max = 10;
    double class_tol = 1e-9;
    double frontier_tol = 1e-10;
    std::optional<FrontierSpec> frontier;
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

/// Inclusive arithmetic grid; throws on a non-positive step or empty range.
std::vector<double> make_grid(double lo, double hi, double step);

}  // namespace harvest::cli

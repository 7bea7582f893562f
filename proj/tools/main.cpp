#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config.hpp"
#include "harvest/io.hpp"
#include "harvest/orbit.hpp"
#include "harvest/scan.hpp"
#include "harvest/stability.hpp"
#include "harvest/yield.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExtinct = 2;
constexpr int kExitHorizon = 3;
constexpr int kExitConfig = 64;

using harvest::cli::RunConfig;
using nlohmann::json;

// Flag values; only explicitly given flags override the config file.
struct Flags {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::uint64_t> seed;
    std::optional<double> r, T, K_c, E;
    std::optional<int> k;
    std::optional<double> n0_plus;
    std::vector<double> history;
    bool history_given = false;
    std::optional<double> rel_tol;
    std::optional<int> consecutive_hits;
    std::optional<int> max_periods;
    std::optional<double> extinction_threshold;
    std::optional<int> samples_per_period;
    std::optional<int> n_samples;
    std::optional<long> iterations;
    std::optional<double> window_halfwidth;
    std::optional<double> domain_max;
    std::optional<std::vector<int>> k_list;
    std::optional<double> rT_min, rT_max, rT_step;
    std::optional<std::string> effort;
    std::optional<int> k_max;
    std::optional<double> tol;
    bool frontier = false;
    std::optional<double> frontier_min, frontier_max, frontier_step;
};

void add_common_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its fields")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", f.out, "output path (prefix for simulate)");
    cmd->add_option("--format", f.format, "csv|json, data tables only")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", f.seed, "RNG seed");
    cmd->add_option("--r", f.r, "intrinsic growth rate");
    cmd->add_option("--T", f.T, "inter-harvest period");
    cmd->add_option("--Kc", f.K_c, "carrying capacity");
    cmd->add_option("--E", f.E, "harvesting effort in (0,1)");
    cmd->add_option("--k", f.k, "impulse delay in periods");
}

RunConfig resolve(const Flags& f) {
    RunConfig cfg;
    if (!f.config_path.empty()) {
        std::ifstream is(f.config_path);
        if (!is) throw std::runtime_error("cannot open config file " + f.config_path);
        json j;
        is >> j;
        cfg = harvest::cli::config_from_json(j);
    }
    if (f.out) cfg.out = *f.out;
    if (f.format) cfg.format = *f.format;
    if (f.seed) cfg.seed = *f.seed;
    if (f.r) cfg.params.r = *f.r;
    if (f.T) cfg.params.T = *f.T;
    if (f.K_c) cfg.params.K_c = *f.K_c;
    if (f.E) cfg.params.E = *f.E;
    if (f.k) cfg.params.k = *f.k;
    if (f.n0_plus || f.history_given) {
        harvest::InitialData init = cfg.init.value_or(harvest::InitialData{});
        if (f.n0_plus) init.n0_plus = *f.n0_plus;
        if (f.history_given) init.history = f.history;
        cfg.init = std::move(init);
    }
    if (f.rel_tol) cfg.stopping.rel_tol = *f.rel_tol;
    if (f.consecutive_hits) cfg.stopping.consecutive_hits = *f.consecutive_hits;
    if (f.max_periods) cfg.stopping.max_periods = *f.max_periods;
    if (f.extinction_threshold) cfg.stopping.extinction_threshold = *f.extinction_threshold;
    if (f.samples_per_period) cfg.samples_per_period = *f.samples_per_period;
    if (f.n_samples) cfg.n_samples = *f.n_samples;
    if (f.iterations || f.window_halfwidth || f.domain_max) {
        harvest::SurvivalRule rule =
            cfg.survival.value_or(harvest::SurvivalRule::for_params(cfg.params));
        if (f.iterations) rule.iterations = *f.iterations;
        if (f.window_halfwidth) rule.window_halfwidth = *f.window_halfwidth;
        if (f.domain_max) rule.domain_max = *f.domain_max;
        cfg.survival = rule;
    }
    if (f.k_list) cfg.sweep.k_list = *f.k_list;
    if (f.rT_min) cfg.sweep.rT_min = *f.rT_min;
    if (f.rT_max) cfg.sweep.rT_max = *f.rT_max;
    if (f.rT_step) cfg.sweep.rT_step = *f.rT_step;
    if (f.effort) {
        if (*f.effort == "optimal")
            cfg.sweep.fixed_effort = std::nullopt;
        else
            cfg.sweep.fixed_effort = std::stod(*f.effort);
    }
    if (f.k_max) cfg.k_max = *f.k_max;
    if (f.tol) cfg.class_tol = cfg.frontier_tol = *f.tol;
    if (f.frontier || f.frontier_min || f.frontier_max || f.frontier_step) {
        harvest::cli::FrontierSpec spec = cfg.frontier.value_or(harvest::cli::FrontierSpec{});
        if (f.frontier_min) spec.rT_min = *f.frontier_min;
        if (f.frontier_max) spec.rT_max = *f.frontier_max;
        if (f.frontier_step) spec.rT_step = *f.frontier_step;
        cfg.frontier = spec;
    }
    return cfg;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << contents;
    if (!os) throw std::runtime_error("write failed for " + path);
}

void write_metadata(const std::string& path, const char* command, const RunConfig& cfg,
                    json extra = json::object()) {
    json meta;
    meta["command"] = command;
    meta["timestamp"] = iso8601_utc_now();
    meta["generator"] = harvest::kGeneratorName;
    meta["config"] = harvest::cli::config_to_json(cfg);
    meta.update(extra);
    write_file(path, meta.dump(2) + "\n");
}

json basin_rows_json(const std::vector<harvest::BasinSample>& samples) {
    json rows = json::array();
    for (const auto& s : samples) {
        json row;
        row["history"] = s.initial.history;
        row["n0_plus"] = s.initial.n0_plus;
        row["outcome"] = harvest::to_string(s.outcome);
        row["steps"] = s.steps_run;
        rows.push_back(std::move(row));
    }
    return rows;
}

json sweep_rows_json(const std::vector<harvest::SweepCell>& cells) {
    json rows = json::array();
    for (const auto& c : cells)
        rows.push_back({{"k", c.k},
                        {"rT", c.rT},
                        {"E", c.E},
                        {"verdict", harvest::to_string(c.verdict)},
                        {"margin", c.margin}});
    return rows;
}

json bounds_rows_json(const std::vector<harvest::BoundRow>& rows_in) {
    json rows = json::array();
    for (const auto& r : rows_in)
        rows.push_back({{"k", r.k}, {"f_k", r.f_k}, {"k_f_k", r.k_f_k}});
    return rows;
}

int cmd_simulate(const RunConfig& cfg) {
    if (!cfg.init) throw std::invalid_argument("simulate: init block (or --n0-plus/--history) required");
    if (cfg.out.empty()) throw std::invalid_argument("simulate: --out required");
    const harvest::Orbit orbit = harvest::iterate(cfg.params, *cfg.init, cfg.stopping);
    const auto trajectory =
        harvest::continuous_trajectory(cfg.params, orbit, cfg.samples_per_period);

    std::ostringstream orbit_csv;
    harvest::write_orbit_csv(orbit_csv, orbit);
    write_file(cfg.out + ".orbit.csv", orbit_csv.str());
    std::ostringstream traj_csv;
    harvest::write_trajectory_csv(traj_csv, trajectory);
    write_file(cfg.out + ".trajectory.csv", traj_csv.str());
    write_metadata(cfg.out + ".meta.json", "simulate", cfg);

    const char* outcome = orbit.outcome == harvest::OrbitOutcome::Extinct     ? "Extinct"
                          : orbit.outcome == harvest::OrbitOutcome::Converged ? "Converged"
                                                                              : "HorizonReached";
    std::cout << "outcome=" << outcome << " step=" << orbit.outcome_step
              << " final=" << harvest::format_double(orbit.values.back()) << '\n';
    switch (orbit.outcome) {
        case harvest::OrbitOutcome::Converged: return kExitOk;
        case harvest::OrbitOutcome::Extinct: return kExitExtinct;
        case harvest::OrbitOutcome::HorizonReached: return kExitHorizon;
    }
    return kExitOk;
}

int cmd_stability(const RunConfig& cfg) {
    const auto verdict = harvest::classify(cfg.params, cfg.class_tol);
    const std::string payload = harvest::to_json(verdict) + "\n";
    if (cfg.out.empty()) {
        std::cout << payload;
    } else {
        write_file(cfg.out, payload);
        write_metadata(cfg.out + ".meta.json", "stability", cfg);
    }
    return kExitOk;
}

int cmd_yield(const RunConfig& cfg) {
    const auto report = harvest::make_yield_report(cfg.params, cfg.frontier_tol);
    const std::string payload = harvest::to_json(report) + "\n";
    if (cfg.out.empty()) {
        std::cout << payload;
    } else {
        write_file(cfg.out, payload);
        write_metadata(cfg.out + ".meta.json", "yield", cfg);
    }
    if (cfg.frontier) {
        if (cfg.out.empty())
            throw std::invalid_argument("yield: --out required for a frontier sweep");
        const auto grid = harvest::cli::make_grid(cfg.frontier->rT_min, cfg.frontier->rT_max,
                                                  cfg.frontier->rT_step);
        const auto rows =
            harvest::frontier_sweep(cfg.params.k, grid, cfg.params.T, cfg.params.K_c);
        std::ostringstream csv;
        harvest::write_frontier_csv(csv, rows);
        write_file(cfg.out + ".frontier.csv", csv.str());
    }
    return kExitOk;
}

int cmd_basin(const RunConfig& cfg) {
    if (cfg.out.empty()) throw std::invalid_argument("basin: --out required");
    const harvest::SurvivalRule rule =
        cfg.survival.value_or(harvest::SurvivalRule::for_params(cfg.params));
    const auto samples = harvest::basin_scan(cfg.params, rule, cfg.n_samples, cfg.seed);
    if (cfg.format == "json") {
        write_file(cfg.out, basin_rows_json(samples).dump() + "\n");
    } else {
        std::ostringstream csv;
        harvest::write_basin_csv(csv, samples, cfg.params.k);
        write_file(cfg.out, csv.str());
    }
    RunConfig echoed = cfg;
    echoed.survival = rule;  // record the rule actually applied
    // The standard protocol scans the k = 1 plane; any other k samples the
    // full (k+1)-dimensional initial cube, so the dimension is recorded.
    write_metadata(cfg.out + ".meta.json", "basin", echoed,
                   {{"sampled_dimensions", cfg.params.k + 1}});
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
    if (cfg.out.empty()) throw std::invalid_argument("sweep: --out required");
    const auto grid =
        harvest::cli::make_grid(cfg.sweep.rT_min, cfg.sweep.rT_max, cfg.sweep.rT_step);
    const harvest::EffortRule effort = cfg.sweep.fixed_effort
                                           ? harvest::EffortRule::fixed(*cfg.sweep.fixed_effort)
                                           : harvest::EffortRule::optimal();
    const auto cells = harvest::stability_region_sweep(cfg.sweep.k_list, grid, effort);
    if (cfg.format == "json") {
        write_file(cfg.out, sweep_rows_json(cells).dump() + "\n");
    } else {
        std::ostringstream csv;
        harvest::write_sweep_csv(csv, cells);
        write_file(cfg.out, csv.str());
    }
    write_metadata(cfg.out + ".meta.json", "sweep", cfg);
    return kExitOk;
}

int cmd_bounds(const RunConfig& cfg) {
    if (cfg.out.empty()) throw std::invalid_argument("bounds: --out required");
    const auto rows = harvest::msy_bound_table(cfg.k_max);
    if (cfg.format == "json") {
        write_file(cfg.out, bounds_rows_json(rows).dump() + "\n");
    } else {
        std::ostringstream csv;
        harvest::write_bounds_csv(csv, rows);
        write_file(cfg.out, csv.str());
    }
    write_metadata(cfg.out + ".meta.json", "bounds", cfg);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logistic population under delayed impulsive harvesting: "
                 "simulation, stability classification, yield optimization and scans"};
    app.require_subcommand(1);

    Flags f_sim, f_stab, f_yield, f_basin, f_sweep, f_bounds;

    CLI::App* sim = app.add_subcommand("simulate", "iterate one orbit and export CSV");
    add_common_flags(sim, f_sim);
    sim->add_option("--n0-plus", f_sim.n0_plus, "population just after t=0");
    sim->add_option("--history", f_sim.history,
                    "pre-history N(0) N(-T) ... N(-(k-1)T)")
        ->expected(-1)
        ->each([&f_sim](const std::string&) { f_sim.history_given = true; });
    sim->add_option("--rel-tol", f_sim.rel_tol, "convergence tolerance");
    sim->add_option("--hits", f_sim.consecutive_hits, "consecutive periods under tolerance");
    sim->add_option("--max-periods", f_sim.max_periods, "horizon in periods");
    sim->add_option("--extinction-threshold", f_sim.extinction_threshold,
                    "orbit extinction threshold");
    sim->add_option("--samples-per-period", f_sim.samples_per_period,
                    "trajectory samples per period");

    CLI::App* stab = app.add_subcommand("stability", "classify the positive periodic solution");
    add_common_flags(stab, f_stab);
    stab->add_option("--tol", f_stab.tol, "boundary tolerance");

    CLI::App* yld = app.add_subcommand("yield", "yield report: Y(E), E_opt, MSY, E*, E**");
    add_common_flags(yld, f_yield);
    yld->add_option("--tol", f_yield.tol, "frontier bisection tolerance");
    yld->add_flag("--frontier-sweep", f_yield.frontier, "also write a frontier sweep CSV");
    yld->add_option("--frontier-min", f_yield.frontier_min, "frontier sweep rT minimum");
    yld->add_option("--frontier-max", f_yield.frontier_max, "frontier sweep rT maximum");
    yld->add_option("--frontier-step", f_yield.frontier_step, "frontier sweep rT step");

    CLI::App* basin = app.add_subcommand("basin", "basin-of-attraction scan");
    add_common_flags(basin, f_basin);
    basin->add_option("--n-samples", f_basin.n_samples, "number of random starts");
    basin->add_option("--iterations", f_basin.iterations, "horizon in periods");
    basin->add_option("--window", f_basin.window_halfwidth, "survival window halfwidth");
    basin->add_option("--domain-max", f_basin.domain_max, "initial values drawn from [0, this]");
    basin->add_option("--extinction-threshold", f_basin.extinction_threshold,
                      "basin extinction threshold");

    CLI::App* sweep = app.add_subcommand("sweep", "stability-region sweep over (k, rT)");
    add_common_flags(sweep, f_sweep);
    sweep->add_option("--k-list", f_sweep.k_list, "delays to sweep")->expected(-1);
    sweep->add_option("--rt-min", f_sweep.rT_min, "rT grid minimum");
    sweep->add_option("--rt-max", f_sweep.rT_max, "rT grid maximum");
    sweep->add_option("--rt-step", f_sweep.rT_step, "rT grid step");
    sweep->add_option("--effort", f_sweep.effort, "fixed effort value or \"optimal\"");

    CLI::App* bounds = app.add_subcommand("bounds", "table of f(k) and k f(k)");
    add_common_flags(bounds, f_bounds);
    bounds->add_option("--k-max", f_bounds.k_max, "largest delay in the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sim->parsed()) return cmd_simulate(resolve(f_sim));
        if (stab->parsed()) return cmd_stability(resolve(f_stab));
        if (yld->parsed()) return cmd_yield(resolve(f_yield));
        if (basin->parsed()) {
            RunConfig cfg = resolve(f_basin);
            if (f_basin.extinction_threshold) {
                harvest::SurvivalRule rule =
                    cfg.survival.value_or(harvest::SurvivalRule::for_params(cfg.params));
                rule.extinction_threshold = *f_basin.extinction_threshold;
                cfg.survival = rule;
            }
            return cmd_basin(cfg);
        }
        if (sweep->parsed()) return cmd_sweep(resolve(f_sweep));
        if (bounds->parsed()) return cmd_bounds(resolve(f_bounds));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitConfig;
}

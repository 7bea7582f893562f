#include "config.hpp"

#include <cmath>
#include <stdexcept>

namespace harvest::cli {

using nlohmann::json;

namespace {

template <typename T>
void read_if(const json& j, const char* key, T& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<T>();
}

}  // namespace

RunConfig config_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("config: root must be a JSON object");
    RunConfig c;
    if (j.contains("params")) {
        const json& p = j.at("params");
        read_if(p, "r", c.params.r);
        read_if(p, "T", c.params.T);
        read_if(p, "K_c", c.params.K_c);
        read_if(p, "E", c.params.E);
        read_if(p, "k", c.params.k);
    }
    if (j.contains("init") && !j.at("init").is_null()) {
        InitialData init;
        const json& i = j.at("init");
        read_if(i, "n0_plus", init.n0_plus);
        read_if(i, "history", init.history);
        c.init = std::move(init);
    }
    if (j.contains("stopping") && !j.at("stopping").is_null()) {
        const json& s = j.at("stopping");
        read_if(s, "rel_tol", c.stopping.rel_tol);
        read_if(s, "consecutive_hits", c.stopping.consecutive_hits);
        read_if(s, "max_periods", c.stopping.max_periods);
        read_if(s, "extinction_threshold", c.stopping.extinction_threshold);
    }
    if (j.contains("survival") && !j.at("survival").is_null()) {
        SurvivalRule rule;
        const json& s = j.at("survival");
        read_if(s, "iterations", rule.iterations);
        read_if(s, "window_halfwidth", rule.window_halfwidth);
        read_if(s, "extinction_threshold", rule.extinction_threshold);
        read_if(s, "domain_max", rule.domain_max);
        c.survival = rule;
    }
    read_if(j, "out", c.out);
    read_if(j, "format", c.format);
    read_if(j, "seed", c.seed);
    if (j.contains("simulate"))
        read_if(j.at("simulate"), "samples_per_period", c.samples_per_period);
    if (j.contains("basin"))
        read_if(j.at("basin"), "n_samples", c.n_samples);
    if (j.contains("sweep")) {
        const json& s = j.at("sweep");
        read_if(s, "k_list", c.sweep.k_list);
        read_if(s, "rT_min", c.sweep.rT_min);
        read_if(s, "rT_max", c.sweep.rT_max);
        read_if(s, "rT_step", c.sweep.rT_step);
        if (s.contains("effort") && !s.at("effort").is_null()) {
            const json& e = s.at("effort");
            if (e.is_number())
                c.sweep.fixed_effort = e.get<double>();
            else if (e.is_string() && e.get<std::string>() == "optimal")
                c.sweep.fixed_effort = std::nullopt;
            else
                throw std::invalid_argument("config: sweep.effort must be a number or \"optimal\"");
        }
    }
    if (j.contains("bounds")) read_if(j.at("bounds"), "k_max", c.k_max);
    if (j.contains("stability")) read_if(j.at("stability"), "tol", c.class_tol);
    if (j.contains("yield")) {
        const json& y = j.at("yield");
        read_if(y, "tol", c.frontier_tol);
        if (y.contains("frontier") && !y.at("frontier").is_null()) {
            FrontierSpec f;
            const json& g = y.at("frontier");
            read_if(g, "rT_min", f.rT_min);
            read_if(g, "rT_max", f.rT_max);
            read_if(g, "rT_step", f.rT_step);
            c.frontier = f;
        }
    }
    return c;
}

json config_to_json(const RunConfig& c) {
    json j;
    j["params"] = {{"r", c.params.r}, {"T", c.params.T}, {"K_c", c.params.K_c},
                   {"E", c.params.E}, {"k", c.params.k}};
    if (c.init)
        j["init"] = {{"n0_plus", c.init->n0_plus}, {"history", c.init->history}};
    else
        j["init"] = nullptr;
    j["stopping"] = {{"rel_tol", c.stopping.rel_tol},
                     {"consecutive_hits", c.stopping.consecutive_hits},
                     {"max_periods", c.stopping.max_periods},
                     {"extinction_threshold", c.stopping.extinction_threshold}};
    if (c.survival)
        j["survival"] = {{"iterations", c.survival->iterations},
                         {"window_halfwidth", c.survival->window_halfwidth},
                         {"extinction_threshold", c.survival->extinction_threshold},
                         {"domain_max", c.survival->domain_max}};
    else
        j["survival"] = nullptr;
    j["out"] = c.out;
    j["format"] = c.format;
    j["seed"] = c.seed;
    j["simulate"] = {{"samples_per_period", c.samples_per_period}};
    j["basin"] = {{"n_samples", c.n_samples}};
    j["sweep"] = {{"k_list", c.sweep.k_list},
                  {"rT_min", c.sweep.rT_min},
                  {"rT_max", c.sweep.rT_max},
                  {"rT_step", c.sweep.rT_step},
                  {"effort", c.sweep.fixed_effort ? json(*c.sweep.fixed_effort) : json("optimal")}};
    j["bounds"] = {{"k_max", c.k_max}};
    j["stability"] = {{"tol", c.class_tol}};
    j["yield"] = {{"tol", c.frontier_tol}};
    if (c.frontier)
        j["yield"]["frontier"] = {{"rT_min", c.frontier->rT_min},
                                  {"rT_max", c.frontier->rT_max},
                                  {"rT_step", c.frontier->rT_step}};
    else
        j["yield"]["frontier"] = nullptr;
    return j;
}

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("grid: step must be > 0");
    if (!(hi >= lo)) throw std::invalid_argument("grid: max must be >= min");
    std::vector<double> values;
    const long n = std::lround(std::floor((hi - lo) / step + 1e-9));
    values.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) values.push_back(lo + static_cast<double>(i) * step);
    return values;
}

}  // namespace harvest::cli

#include "harvest/io.hpp"

#include <charconv>
#include <ostream>
#include <system_error>

#include "json.hpp"

namespace harvest {

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_orbit_csv(std::ostream& os, const Orbit& orbit) {
    os << "n,x_n\n";
    for (std::size_t n = 0; n < orbit.values.size(); ++n)
        os << n << ',' << format_double(orbit.values[n]) << '\n';
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryPoint>& points) {
    os << "t,N\n";
    for (const auto& pt : points)
        os << format_double(pt.t) << ',' << format_double(pt.N) << '\n';
}

void write_basin_csv(std::ostream& os, const std::vector<BasinSample>& samples, int k) {
    // History columns N0, Nm1, ... hold N(0), N(-T), ...; absent when k = 0.
    for (int j = 0; j < k; ++j) {
        if (j == 0)
            os << "N0,";
        else
            os << "Nm" << j << ',';
    }
    os << "n0_plus,outcome,steps\n";
    for (const auto& s : samples) {
        for (int j = 0; j < k; ++j)
            os << format_double(s.initial.history[static_cast<std::size_t>(j)]) << ',';
        os << format_double(s.initial.n0_plus) << ',' << to_string(s.outcome) << ','
           << s.steps_run << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
    os << "k,rT,E,verdict,margin\n";
    for (const auto& c : cells)
        os << c.k << ',' << format_double(c.rT) << ',' << format_double(c.E) << ','
           << to_string(c.verdict) << ',' << format_double(c.margin) << '\n';
}

void write_bounds_csv(std::ostream& os, const std::vector<BoundRow>& rows) {
    os << "k,f_k,k_f_k\n";
    for (const auto& r : rows)
        os << r.k << ',' << format_double(r.f_k) << ',' << format_double(r.k_f_k) << '\n';
}

void write_frontier_csv(std::ostream& os, const std::vector<FrontierRow>& rows) {
    os << "rT,k,E_star,E_star_star,E_opt,MSY\n";
    for (const auto& r : rows) {
        os << format_double(r.rT) << ',' << r.k << ',' << format_double(r.E_star) << ',';
        if (r.E_star_star) os << format_double(*r.E_star_star);
        os << ',' << format_double(r.E_opt) << ',' << format_double(r.msy) << '\n';
    }
}

std::string to_json(const StabilityVerdict& v) {
    nlohmann::json j;
    j["class"] = to_string(v.cls);
    j["x_star"] = v.equilibrium ? nlohmann::json(*v.equilibrium) : nlohmann::json();
    j["p0"] = v.coefficients ? nlohmann::json(v.coefficients->p0) : nlohmann::json();
    j["pk"] = v.coefficients ? nlohmann::json(v.coefficients->pk) : nlohmann::json();
    j["theta_star"] = v.theta_star ? nlohmann::json(*v.theta_star) : nlohmann::json();
    j["margin"] = v.margin;
    return j.dump();
}

std::string to_json(const YieldReport& r) {
    nlohmann::json j;
    j["E"] = r.E;
    j["yield"] = r.yield ? nlohmann::json(*r.yield) : nlohmann::json();
    j["E_opt"] = r.E_opt;
    j["max_yield"] = r.max_yield;
    j["E_star"] = r.E_star;
    j["E_star_star"] = r.E_star_star ? nlohmann::json(*r.E_star_star) : nlohmann::json();
    j["msy_sustainable"] = r.msy_sustainable;
    j["rT_bound"] = r.rT_bound ? nlohmann::json(*r.rT_bound) : nlohmann::json();
    j["k"] = r.k;
    return j.dump();
}

}  // namespace harvest

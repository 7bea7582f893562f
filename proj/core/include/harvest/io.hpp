#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "harvest/orbit.hpp"
#include "harvest/scan.hpp"
#include "harvest/stability.hpp"
#include "harvest/yield.hpp"

namespace harvest {

/// 17 significant digits, '.' decimal separator, locale independent.
std::string format_double(double v);

// Headerful CSV writers. All floating point cells use format_double;
// optional cells are left empty.
void write_orbit_csv(std::ostream& os, const Orbit& orbit);
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryPoint>& points);
void write_basin_csv(std::ostream& os, const std::vector<BasinSample>& samples, int k);
void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells);
void write_bounds_csv(std::ostream& os, const std::vector<BoundRow>& rows);
void write_frontier_csv(std::ostream& os, const std::vector<FrontierRow>& rows);

/// JSON records; absent values serialize as null.
/// Verdict keys: class, x_star, p0, pk, theta_star, margin.
std::string to_json(const StabilityVerdict& v);
/// Report keys: E, yield, E_opt, max_yield, E_star, E_star_star,
/// msy_sustainable, rT_bound, k.
std::string to_json(const YieldReport& r);

}  // namespace harvest

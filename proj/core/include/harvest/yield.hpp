#pragma once

#include <optional>
#include <vector>

#include "harvest/model.hpp"

namespace harvest {

/// Yield diagnostics for one parameter set.
struct YieldReport {
    double E = 0.0;                      ///< effort queried
    std::optional<double> yield;         ///< Y(E); absent without an equilibrium
    double E_opt = 0.0;                  ///< 1 - e^{-rT/2}
    double max_yield = 0.0;              ///< yield at E_opt, delay independent
    double E_star = 0.0;                 ///< sustainable for every E below this
    std::optional<double> E_star_star;   ///< sharp frontier; absent when all of (0, E_opt] is sustainable
    bool msy_sustainable = false;        ///< k <= 1, or rT < msy_rt_bound(k)
    std::optional<double> rT_bound;      ///< f(k), set for k >= 2
    int k = 0;
};

/// Y(E) = K_c E / ((1-E) T) * ((1-E)e^{rT} - 1)/(e^{rT} - 1).
/// Throws std::domain_error when rT < -ln(1-E); the boundary case
/// rT = -ln(1-E) returns the limiting yield 0.
double yield_at(double r, double T, double K_c, double E);

/// E_opt = 1 - e^{-rT/2}.
double optimal_effort(double r, double T);

/// K_c (e^{rT/2} - 1) / (T (e^{rT/2} + 1)); equals yield_at at E_opt.
double max_yield(double r, double T, double K_c);

/// E* = (2 + e^{-rT} - sqrt(e^{-rT}(e^{-rT} + 8))) / 2. Every effort below
/// E* satisfies the delay-independent sufficient stability test.
double guaranteed_sustainable_effort(double r, double T);

/// Largest rT for which the maximum yield stays sustainable:
/// f(k) = -2 ln(1 - 2 cos(k pi/(2k+1))) for k >= 2, +infinity for k = 1.
double msy_rt_bound(int k);

/// Sharp sustainability frontier E** in effort for k >= 2. Absent when
/// rT < msy_rt_bound(k) (all of (0, E_opt] is sustainable) or k <= 1.
/// Located by bisection of the sharp classifier over E; valid because the
/// set of sustainable efforts below E_opt is downward closed.
std::optional<double> sustainability_frontier(double r, double T, double K_c,
                                              int k, double effort_tol = 1e-10);

YieldReport make_yield_report(const ModelParams& p, double effort_tol = 1e-10);

struct FrontierRow {
    double rT = 0.0;
    int k = 0;
    double E_star = 0.0;
    std::optional<double> E_star_star;
    double E_opt = 0.0;
    double msy = 0.0;
};

/// One frontier row per rT value, with r = rT / T.
std::vector<FrontierRow> frontier_sweep(int k, const std::vector<double>& rT_values,
                                        double T, double K_c);

}  // namespace harvest

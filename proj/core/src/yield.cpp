#include "harvest/yield.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "harvest/stability.hpp"

namespace harvest {

namespace {

void check_environment(double r, double T, double K_c) {
    if (!(r > 0.0)) throw std::invalid_argument("yield: r must be > 0");
    if (!(T > 0.0)) throw std::invalid_argument("yield: T must be > 0");
    if (!(K_c > 0.0)) throw std::invalid_argument("yield: K_c must be > 0");
}

}  // namespace

double yield_at(double r, double T, double K_c, double E) {
    check_environment(r, T, K_c);
    if (!(E > 0.0 && E < 1.0)) throw std::invalid_argument("yield_at: E must lie in (0,1)");
    const double s = r * T + std::log1p(-E);  // (1-E)e^{rT} - 1 = expm1(s)
    if (s < 0.0)
        throw std::domain_error("yield_at: no positive equilibrium (rT < -ln(1-E))");
    return K_c * E / ((1.0 - E) * T) * std::expm1(s) / std::expm1(r * T);
}

double optimal_effort(double r, double T) {
    if (!(r > 0.0) || !(T > 0.0))
        throw std::invalid_argument("optimal_effort: r, T must be > 0");
    return -std::expm1(-r * T / 2.0);
}

double max_yield(double r, double T, double K_c) {
    check_environment(r, T, K_c);
    const double half = std::expm1(r * T / 2.0);  // e^{rT/2} - 1
    return K_c * half / (T * (half + 2.0));
}

double guaranteed_sustainable_effort(double r, double T) {
    if (!(r > 0.0) || !(T > 0.0))
        throw std::invalid_argument("guaranteed_sustainable_effort: r, T must be > 0");
    const double q = std::exp(-r * T);
    return (2.0 + q - std::sqrt(q * (q + 8.0))) / 2.0;
}

double msy_rt_bound(int k) {
    if (k < 1) throw std::invalid_argument("msy_rt_bound: k must be >= 1");
    if (k == 1) return std::numeric_limits<double>::infinity();
    const double c = std::cos(static_cast<double>(k) * std::numbers::pi / (2 * k + 1));
    return -2.0 * std::log1p(-2.0 * c);
}

std::optional<double> sustainability_frontier(double r, double T, double K_c, int k,
                                              double effort_tol) {
    check_environment(r, T, K_c);
    if (!(effort_tol > 0.0))
        throw std::invalid_argument("sustainability_frontier: tol must be > 0");
    if (k <= 1) return std::nullopt;  // maximum yield is unconditionally sustainable
    const double rT = r * T;
    if (rT < msy_rt_bound(k)) return std::nullopt;

    const auto stable_at = [&](double E) {
        return classify(ModelParams{r, K_c, T, E, k}).cls == StabilityClass::Stable;
    };
    double lo = 1e-8;
    double hi = optimal_effort(r, T);
    if (!stable_at(lo) || stable_at(hi))
        throw std::runtime_error("sustainability_frontier: bisection bracket failed");
    while (hi - lo > effort_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (stable_at(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

YieldReport make_yield_report(const ModelParams& p, double effort_tol) {
    validate(p);
    YieldReport rep;
    rep.E = p.E;
    rep.k = p.k;
    rep.E_opt = optimal_effort(p.r, p.T);
    rep.max_yield = max_yield(p.r, p.T, p.K_c);
    rep.E_star = guaranteed_sustainable_effort(p.r, p.T);
    try {
        rep.yield = yield_at(p.r, p.T, p.K_c, p.E);
    } catch (const std::domain_error&) {
        rep.yield = std::nullopt;
    }
    if (p.k >= 2) {
        const double bound = msy_rt_bound(p.k);
        rep.rT_bound = bound;
        rep.msy_sustainable = p.r * p.T < bound;
        rep.E_star_star = sustainability_frontier(p.r, p.T, p.K_c, p.k, effort_tol);
    } else {
        rep.msy_sustainable = true;
    }
    return rep;
}

std::vector<FrontierRow> frontier_sweep(int k, const std::vector<double>& rT_values,
                                        double T, double K_c) {
    if (!(T > 0.0) || !(K_c > 0.0))
        throw std::invalid_argument("frontier_sweep: T, K_c must be > 0");
    std::vector<FrontierRow> rows;
    rows.reserve(rT_values.size());
    for (double rT : rT_values) {
        if (!(rT > 0.0)) throw std::invalid_argument("frontier_sweep: rT must be > 0");
        const double r = rT / T;
        FrontierRow row;
        row.rT = rT;
        row.k = k;
        row.E_star = guaranteed_sustainable_effort(r, T);
        row.E_star_star = sustainability_frontier(r, T, K_c, k);
        row.E_opt = optimal_effort(r, T);
        row.msy = max_yield(r, T, K_c);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace harvest

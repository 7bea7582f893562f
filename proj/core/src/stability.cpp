#include "harvest/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "harvest/orbit.hpp"

namespace harvest {

namespace {

// Exponent-scale residual of the existence condition rT > -ln(1-E);
// the equilibrium exists iff this is positive.
inline double existence_margin(const ModelParams& p) {
    return p.r * p.T + std::log1p(-p.E);
}

inline double equilibrium_from_margin(const ModelParams& p, double s) {
    return p.K_c * std::expm1(s) / std::expm1(p.r * p.T);
}

// Right side of the k >= 2 sharp inequality, cos(theta*) < h1(E).
inline double h1_bound(double rT, double E) {
    return (1.0 + E) * std::exp(-rT) / (2.0 * (1.0 - E)) +
           (1.0 - E) * (1.0 - E) * std::exp(rT) / 2.0;
}

// General-k sharp test, assuming the equilibrium exists and k >= 1.
// `v` arrives with equilibrium and coefficients filled in.
StabilityVerdict sharp_general(const ModelParams& p, double tol, StabilityVerdict v) {
    const double p0 = v.coefficients->p0;
    const double first_margin = static_cast<double>(p.k + 1) / p.k - p0;
    if (first_margin < -tol) {
        v.cls = StabilityClass::Unstable;
        v.margin = first_margin;
        return v;
    }
    if (first_margin <= tol) {
        v.cls = StabilityClass::Marginal;
        v.margin = first_margin;
        return v;
    }
    const double theta = solve_theta_star(p0, p.k);
    v.theta_star = theta;
    const double second_margin = h1_bound(p.r * p.T, p.E) - std::cos(theta);
    v.margin = std::min(first_margin, second_margin);
    if (second_margin > tol)
        v.cls = StabilityClass::Stable;
    else if (second_margin < -tol)
        v.cls = StabilityClass::Unstable;
    else
        v.cls = StabilityClass::Marginal;
    return v;
}

StabilityVerdict verdict_base(const ModelParams& p, double s) {
    StabilityVerdict v;
    v.equilibrium = equilibrium_from_margin(p, s);
    const double one_minus_e = 1.0 - p.E;
    const double p0 = std::exp(-p.r * p.T) / (one_minus_e * one_minus_e);
    v.coefficients = LinearizationCoefficients{p0, p.E * p0};
    return v;
}

}  // namespace

const char* to_string(StabilityClass cls) {
    switch (cls) {
        case StabilityClass::NoPositiveEquilibrium: return "NoPositiveEquilibrium";
        case StabilityClass::Stable: return "Stable";
        case StabilityClass::Unstable: return "Unstable";
        case StabilityClass::Marginal: return "Marginal";
    }
    return "?";
}

std::optional<StabilityClass> stability_class_from_string(const std::string& s) {
    if (s == "NoPositiveEquilibrium") return StabilityClass::NoPositiveEquilibrium;
    if (s == "Stable") return StabilityClass::Stable;
    if (s == "Unstable") return StabilityClass::Unstable;
    if (s == "Marginal") return StabilityClass::Marginal;
    return std::nullopt;
}

const char* to_string(EmpiricalVerdict v) {
    switch (v) {
        case EmpiricalVerdict::Stable: return "Stable";
        case EmpiricalVerdict::Unstable: return "Unstable";
        case EmpiricalVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::optional<double> positive_equilibrium(const ModelParams& p) {
    validate(p);
    const double s = existence_margin(p);
    if (!(s > 0.0)) return std::nullopt;
    return equilibrium_from_margin(p, s);
}

LinearizationCoefficients linearization(const ModelParams& p) {
    validate(p);
    if (!(existence_margin(p) > 0.0))
        throw std::domain_error("linearization: no positive equilibrium (rT <= -ln(1-E))");
    const double one_minus_e = 1.0 - p.E;
    const double p0 = std::exp(-p.r * p.T) / (one_minus_e * one_minus_e);
    return {p0, p.E * p0};
}

double solve_theta_star(double p0, int k, double theta_tol) {
    if (!(p0 > 0.0)) throw std::invalid_argument("solve_theta_star: p0 must be > 0");
    if (k < 1) throw std::invalid_argument("solve_theta_star: k must be >= 1");
    if (!(theta_tol >= 0.0)) throw std::invalid_argument("solve_theta_star: bad tolerance");

    const double target = 1.0 / p0;  // sin(k t)/sin((k+1) t) sweeps (k/(k+1), inf)
    if (!(target > static_cast<double>(k) / (k + 1)))
        throw std::domain_error("solve_theta_star: no root, p0 >= (k+1)/k");

    // g < 0 left of the root, g > 0 right of it; sin((k+1) theta) > 0 inside.
    const auto g = [&](double theta) {
        return std::sin(k * theta) - target * std::sin((k + 1) * theta);
    };
    double lo = 0.0;
    double hi = std::numbers::pi / (k + 1);
    for (int it = 0; it < 200 && hi - lo > theta_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // machine resolution reached
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

StabilityVerdict classify(const ModelParams& p, double tol) {
    validate(p);
    const double s = existence_margin(p);
    if (!(s > 0.0)) {
        StabilityVerdict v;
        v.cls = StabilityClass::NoPositiveEquilibrium;
        v.margin = s;
        return v;
    }
    StabilityVerdict v = verdict_base(p, s);
    if (p.k == 0) {
        // First-order recurrence; multiplier e^{-rT}/(1-E) < 1 whenever the
        // equilibrium exists.
        v.cls = StabilityClass::Stable;
        v.margin = -std::expm1(-s);
        return v;
    }
    if (p.k == 1) {
        // Closed-form threshold rT > -ln((1-E)^2/E).
        const double margin = p.r * p.T + 2.0 * std::log1p(-p.E) - std::log(p.E);
        v.margin = margin;
        if (margin > tol)
            v.cls = StabilityClass::Stable;
        else if (margin < -tol)
            v.cls = StabilityClass::Unstable;
        else
            v.cls = StabilityClass::Marginal;
        return v;
    }
    return sharp_general(p, tol, std::move(v));
}

StabilityVerdict classify_general(const ModelParams& p, double tol) {
    validate(p);
    if (p.k < 1)
        throw std::invalid_argument("classify_general: requires k >= 1");
    const double s = existence_margin(p);
    if (!(s > 0.0)) {
        StabilityVerdict v;
        v.cls = StabilityClass::NoPositiveEquilibrium;
        v.margin = s;
        return v;
    }
    return sharp_general(p, tol, verdict_base(p, s));
}

bool sufficient_stable(const ModelParams& p) {
    validate(p);
    // rT > ln(1+E) - 2 ln(1-E), i.e. |p0| + |pk| < 1.
    return p.r * p.T + 2.0 * std::log1p(-p.E) - std::log1p(p.E) > 0.0;
}

EmpiricalVerdict oracle_stability(const ModelParams& p, double rel_perturbation,
                                  int horizon) {
    validate(p);
    if (!(rel_perturbation > 0.0 && rel_perturbation <= 0.05))
        throw std::invalid_argument("oracle_stability: rel_perturbation must be in (0, 0.05]");
    if (horizon < 1) throw std::invalid_argument("oracle_stability: horizon must be >= 1");
    const auto x_star = positive_equilibrium(p);
    if (!x_star)
        throw std::domain_error("oracle_stability: no positive equilibrium");

    const double exit_band = 0.20 * *x_star;
    const double settle_band = 0.1 * rel_perturbation * *x_star;
    const double growth_m1 = std::expm1(p.r * p.T);
    const auto flow = [&](double x) {
        return p.K_c * (1.0 + growth_m1) * x / (p.K_c + x * growth_m1);
    };

    const std::size_t len = static_cast<std::size_t>(p.k) + 1;
    std::vector<double> window(len, *x_star * (1.0 + rel_perturbation));
    std::size_t head = 0;  // oldest entry, the lagged value
    for (int n = 0; n < horizon; ++n) {
        const double x_lag = window[head];
        const double x_cur = window[(head + len - 1) % len];
        const double raw = flow(x_cur) - p.E * flow(x_lag);
        const double next = raw > 0.0 ? raw : 0.0;
        window[head] = next;
        head = (head + 1) % len;
        if (next <= 0.0 || std::abs(next - *x_star) > exit_band)
            return EmpiricalVerdict::Unstable;
        double worst = 0.0;
        for (double w : window) worst = std::max(worst, std::abs(w - *x_star));
        if (worst < settle_band) return EmpiricalVerdict::Stable;
    }
    return EmpiricalVerdict::Inconclusive;
}

}  // namespace harvest

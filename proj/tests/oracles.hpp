// Test-only numerical oracles, independent of the library's formula paths.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

namespace oracles {

// Classical RK4 on dN/dt = r N (1 - N/K_c) with a fixed step count.
inline double integrate_logistic(double x0, double r, double K_c, double dt,
                                 int steps = 200000) {
    const auto f = [&](double x) { return r * x * (1.0 - x / K_c); };
    const double h = dt / steps;
    double x = x0;
    for (int i = 0; i < steps; ++i) {
        const double k1 = f(x);
        const double k2 = f(x + 0.5 * h * k1);
        const double k3 = f(x + 0.5 * h * k2);
        const double k4 = f(x + h * k3);
        x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return x;
}

// Symmetric difference quotient.
inline double central_difference(const std::function<double(double)>& f, double x,
                                 double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Brackets the root of a monotone function on (lo, hi) with a dense grid,
// then returns the bracket midpoint. Used to confirm bisection results.
inline double grid_root(const std::function<double(double)>& g, double lo, double hi,
                        int cells = 2000000) {
    double prev_t = lo;
    double prev_g = g(lo);
    for (int i = 1; i <= cells; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / cells;
        const double gt = g(t);
        if ((prev_g < 0.0) != (gt < 0.0)) return 0.5 * (prev_t + t);
        prev_t = t;
        prev_g = gt;
    }
    throw std::runtime_error("grid_root: no sign change found");
}

// Golden-section maximum of a unimodal function on [lo, hi].
inline double golden_section_argmax(const std::function<double(double)>& f, double lo,
                                    double hi, double tol = 1e-10) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Deterministic uniform draw in [lo, hi) for property-style tests.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

}  // namespace oracles

#pragma once

#include <optional>
#include <string>

#include "harvest/model.hpp"

namespace harvest {

/// Coefficients of the linearized recurrence u_{n+1} = p0 u_n - pk u_{n-k}
/// at the positive equilibrium: p0 = e^{-rT}/(1-E)^2, pk = E p0.
struct LinearizationCoefficients {
    double p0 = 0.0;
    double pk = 0.0;
};

enum class StabilityClass { NoPositiveEquilibrium, Stable, Unstable, Marginal };

const char* to_string(StabilityClass cls);
std::optional<StabilityClass> stability_class_from_string(const std::string& s);

/// Analytic classification of the positive periodic solution.
struct StabilityVerdict {
    StabilityClass cls = StabilityClass::NoPositiveEquilibrium;
    std::optional<double> equilibrium;
    std::optional<LinearizationCoefficients> coefficients;
    std::optional<double> theta_star;
    /// Signed residual of the binding inequality; positive on the stable side.
    double margin = 0.0;
};

/// x* = ((1-E)e^{rT} - 1) K_c / (e^{rT} - 1) when rT > -ln(1-E),
/// absent otherwise.
std::optional<double> positive_equilibrium(const ModelParams& p);

/// Throws std::domain_error when no positive equilibrium exists.
LinearizationCoefficients linearization(const ModelParams& p);

/// Unique root of sin(k theta)/sin((k+1) theta) = 1/p0 in (0, pi/(k+1)).
///
/// Requires p0 < (k+1)/k (std::domain_error otherwise). Bisection on the
/// sign of sin(k theta) - sin((k+1) theta)/p0, run down to theta_tol or
/// machine resolution, whichever is coarser.
double solve_theta_star(double p0, int k, double theta_tol = 1e-15);

/// Sharp stability test. Dispatch: no equilibrium when rT <= -ln(1-E);
/// k = 0 via the scalar multiplier e^{-rT}/(1-E); k = 1 via the closed-form
/// threshold rT > -ln((1-E)^2/E); k >= 2 via p0 < (k+1)/k together with
/// cos(theta*) < (1+E)e^{-rT}/(2(1-E)) + (1-E)^2 e^{rT}/2. Inequalities
/// within tol of equality classify as Marginal.
StabilityVerdict classify(const ModelParams& p, double tol = 1e-9);

/// The general-k sharp test evaluated directly (valid for k >= 1).
/// classify() routes k = 1 to the closed-form branch; this entry point
/// exposes the general path for consistency checks.
StabilityVerdict classify_general(const ModelParams& p, double tol = 1e-9);

/// Delay-independent sufficient test: rT > ln(1+E) - 2 ln(1-E),
/// i.e. |p0| + |pk| < 1. True implies classify() is Stable.
bool sufficient_stable(const ModelParams& p);

enum class EmpiricalVerdict { Stable, Unstable, Inconclusive };

const char* to_string(EmpiricalVerdict v);

/// Simulation ground truth: starts the recurrence from a constant window
/// x*(1 + rel_perturbation) and watches the deviation. Stable once the
/// whole window settles inside a tenth of the initial offset; Unstable on
/// extinction or on leaving a +-20% band around x*; Inconclusive at the
/// horizon.
EmpiricalVerdict oracle_stability(const ModelParams& p,
                                  double rel_perturbation = 0.01,
                                  int horizon = 5000);

}  // namespace harvest

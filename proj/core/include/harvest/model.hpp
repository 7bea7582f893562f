#pragma once

#include <vector>

namespace harvest {

/// Parameters of the logistic model with periodic delayed harvesting.
///
/// Between harvests the population follows dN/dt = r N (1 - N/K_c).
/// Every T time units the post-harvest size drops by E times the
/// population measured k harvests earlier, truncated at zero.
struct ModelParams {
    double r = 1.0;    ///< intrinsic growth rate, 1/time
    double K_c = 1.0;  ///< carrying capacity, population units
    double T = 1.0;    ///< inter-harvest period, time
    double E = 0.5;    ///< harvesting effort, fraction in (0,1)
    int k = 0;         ///< impulse delay in whole periods, >= 0
};

/// Throws std::invalid_argument unless r, K_c, T > 0, E in (0,1), k >= 0.
void validate(const ModelParams& p);

/// Start state: the population just after t = 0 plus the k pre-history
/// sizes used by the first k harvest deductions.
///
/// Ordering convention: history[0] = N(0), history[j] = N(-jT).
struct InitialData {
    double n0_plus = 0.0;
    std::vector<double> history;
};

/// Throws std::invalid_argument on negative entries or history length != k.
void validate(const InitialData& init, int k);

/// Closed-form logistic growth over dt in [0, T] starting from x >= 0:
/// returns K_c a x / (K_c + x (a - 1)) with a = e^{r dt}.
///
/// dt = 0 returns x bit-exactly. Strictly increasing in x; fixes 0 and K_c.
double logistic_flow(double x, const ModelParams& p, double dt);

}  // namespace harvest

#include "harvest/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace harvest {

void validate(const ModelParams& p) {
    if (!(p.r > 0.0)) throw std::invalid_argument("ModelParams: r must be > 0");
    if (!(p.K_c > 0.0)) throw std::invalid_argument("ModelParams: K_c must be > 0");
    if (!(p.T > 0.0)) throw std::invalid_argument("ModelParams: T must be > 0");
    if (!(p.E > 0.0 && p.E < 1.0))
        throw std::invalid_argument("ModelParams: E must lie in (0,1)");
    if (p.k < 0) throw std::invalid_argument("ModelParams: k must be >= 0");
}

void validate(const InitialData& init, int k) {
    if (!(init.n0_plus >= 0.0))
        throw std::invalid_argument("InitialData: n0_plus must be >= 0");
    if (static_cast<int>(init.history.size()) != k)
        throw std::invalid_argument("InitialData: history length " +
                                    std::to_string(init.history.size()) +
                                    " does not match delay k = " + std::to_string(k));
    for (double h : init.history)
        if (!(h >= 0.0))
            throw std::invalid_argument("InitialData: history entries must be >= 0");
}

double logistic_flow(double x, const ModelParams& p, double dt) {
    if (!(x >= 0.0)) throw std::invalid_argument("logistic_flow: x must be >= 0");
    if (!(dt >= 0.0 && dt <= p.T))
        throw std::invalid_argument("logistic_flow: dt must lie in [0, T]");
    if (dt == 0.0) return x;  // identity, kept bit-exact for trajectory sampling
    const double growth = std::expm1(p.r * dt);
    return p.K_c * (1.0 + growth) * x / (p.K_c + x * growth);
}

}  // namespace harvest

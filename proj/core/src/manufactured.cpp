#include "hwlod/manufactured.hpp"

#include <cmath>

namespace hwlod {

double manufactured_value(double x, double y, double t) { return x * std::exp(-y * t); }

double manufactured_source(const MarketParams& params, double x, double y, double t) {
    const double bracket = -y + params.rho * params.xi * y * std::sqrt(y) * t -
                           0.5 * params.xi * params.xi * y * y * t * t + params.mu * y * t + params.beta;
    return x * std::exp(-y * t) * bracket;
}

}  // namespace hwlod

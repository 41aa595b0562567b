#include "hwlod/flux.hpp"

#include <cmath>
#include <stdexcept>

namespace hwlod {

namespace {

// Shared power kernel: ratio^alpha with ratio in (0,1], evaluated as
// exp(alpha ln ratio). Keeping every face on this one path makes the two
// sweep directions agree bitwise.
inline double ratio_pow(double ratio, double alpha) { return std::exp(alpha * std::log(ratio)); }

}  // namespace

FluxWeights interior_flux_weights(double a, double b, double alpha, double x_lo, double x_hi) {
    if (!(x_lo > 0.0 && x_hi > x_lo))
        throw std::invalid_argument("interior_flux_weights: requires 0 < x_lo < x_hi");
    if (std::abs(alpha) < kAlphaLimitSwitch) {
        const double w = a / std::log(x_hi / x_lo);
        return {-w, w};
    }
    // Normalize by the larger power so the stored exponential stays in (0,1]
    // for either sign of alpha; the raw x^alpha form overflows for the large
    // fallback exponents.
    if (alpha > 0.0) {
        const double e = ratio_pow(x_lo / x_hi, alpha);  // (x_lo/x_hi)^alpha in (0,1)
        const double denom = 1.0 - e;
        return {-b * e / denom, b / denom};
    }
    const double s = ratio_pow(x_hi / x_lo, alpha);  // (x_hi/x_lo)^alpha in (0,1)
    const double denom = s - 1.0;
    return {-b / denom, b * s / denom};
}

FluxWeights interior_flux_weights(double a, double b, double x_lo, double x_hi) {
    if (!(a > 0.0)) throw std::invalid_argument("interior_flux_weights: requires a > 0 (or supply alpha)");
    return interior_flux_weights(a, b, b / a, x_lo, x_hi);
}

FluxWeights origin_flux_weights(double a, double b) { return {-0.5 * (a - b), 0.5 * (a + b)}; }

}  // namespace hwlod

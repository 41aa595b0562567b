#include "hwlod/coefficients.hpp"

#include <cmath>

namespace hwlod {

XSweepCoeffs xsweep_coefficients(const MarketParams& params, double y) {
    XSweepCoeffs c{};
    const double root_y = std::sqrt(y);
    const double drift = params.r - y - 1.5 * params.rho * params.xi * root_y;
    c.a_bar = 0.5 * y;
    c.b_bar = drift;
    c.c1 = 0.5 * params.r + drift + 0.5 * params.beta;
    c.degenerate = c.a_bar < kDegenerateDiffusionEps;
    if (c.degenerate) {
        // sign(b_bar) * alpha_max; zero convection leaves alpha at 0 so the
        // flux kernel lands in its vanishing-diffusion limit.
        c.alpha_bar = (drift > 0.0 ? kAlphaFallback : drift < 0.0 ? -kAlphaFallback : 0.0);
    } else {
        c.alpha_bar = drift / c.a_bar;
    }
    return c;
}

YSweepCoeffs ysweep_coefficients(const MarketParams& params, double x, double y_half) {
    YSweepCoeffs c{};
    c.a_hat = 0.5 * params.xi * params.xi;
    c.b_hat = params.mu - params.xi * params.xi;
    c.c2 = 0.5 * params.r + c.b_hat + 0.5 * params.beta;
    c.alpha_hat = c.b_hat / c.a_hat;
    c.k = mixed_coefficient(params, x, y_half);
    return c;
}

double mixed_coefficient(const MarketParams& params, double x, double y) {
    return params.rho * params.xi * x * y * std::sqrt(y);
}

}  // namespace hwlod

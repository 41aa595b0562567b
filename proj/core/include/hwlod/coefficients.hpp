#pragma once

#include <functional>

#include "hwlod/market.hpp"

namespace hwlod {

/// Threshold below which the x-direction diffusion factor a_bar(y) = y/2 is
/// treated as degenerate and the fitting exponent falls back to a large value.
inline constexpr double kDegenerateDiffusionEps = 1e-14;

/// Magnitude of the fitting-exponent fallback used where a_bar vanishes.
inline constexpr double kAlphaFallback = 1e8;

/// Coefficients of the asset-direction conservative operator
///   -(x (a_bar x u_x + b_bar u))_x + c1 u
/// frozen at one variance level y.
struct XSweepCoeffs {
    double a_bar;      ///< diffusion factor y/2
    double b_bar;      ///< convection factor r - y - 1.5 rho xi sqrt(y)
    double c1;         ///< reaction 1.5 r - y - 1.5 rho xi sqrt(y) + beta/2
    double alpha_bar;  ///< fitting exponent b_bar / a_bar, or the fallback
    bool degenerate;   ///< true when a_bar < kDegenerateDiffusionEps
};

/// Coefficients of the variance-direction conservative operator
///   -(y (a_hat y u_y + b_hat u))_y + c2 u - (k u_x)_y
/// All fields except the mixed coefficient are constants of the model.
struct YSweepCoeffs {
    double a_hat;      ///< diffusion factor xi^2 / 2
    double b_hat;      ///< convection factor mu - xi^2
    double c2;         ///< reaction r/2 + mu - xi^2 + beta/2
    double alpha_hat;  ///< fitting exponent b_hat / a_hat
    double k;          ///< mixed coefficient rho xi x y^{3/2} at (x, y_half)
};

XSweepCoeffs xsweep_coefficients(const MarketParams& params, double y);

YSweepCoeffs ysweep_coefficients(const MarketParams& params, double x, double y_half);

/// Mixed-derivative coefficient k(x,y) = rho xi x y^{3/2}.
double mixed_coefficient(const MarketParams& params, double x, double y);

using SourceFn = std::function<double(double x, double y, double t)>;

/// Splits a source g between the two sweeps: g1 = weight_x * g goes to the
/// asset sweep, g2 = (1 - weight_x) * g to the variance sweep, so g1 + g2 = g
/// pointwise for any weight.
struct SourceSplit {
    SourceFn g;              ///< total source; empty means identically zero
    double weight_x = 0.5;

    double total(double x, double y, double t) const { return g ? g(x, y, t) : 0.0; }
    double g1(double x, double y, double t) const { return weight_x * total(x, y, t); }
    double g2(double x, double y, double t) const { return (1.0 - weight_x) * total(x, y, t); }
};

}  // namespace hwlod

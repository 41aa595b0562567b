#pragma once

#include "hwlod/market.hpp"

namespace hwlod {

/// Smooth reference solution u = x e^{-yt} used by the accuracy studies.
double manufactured_value(double x, double y, double t);

/// Source that makes manufactured_value solve the pricing PDE:
///   g = x e^{-yt} (-y + rho xi y^{3/2} t - xi^2 y^2 t^2 / 2 + mu y t + beta)
double manufactured_source(const MarketParams& params, double x, double y, double t);

}  // namespace hwlod

#pragma once

#include <functional>
#include <vector>

#include "hwlod/axis.hpp"
#include "hwlod/market.hpp"
#include "hwlod/payoff.hpp"

namespace hwlod {

/// Time-indexed Dirichlet data on the four box edges, sampled on the solver's
/// own grids so the sweeps never interpolate. Layout: edge[k][node index].
struct BoundaryProfiles {
    std::vector<std::vector<double>> x_lo;  ///< u_D(0,   y_j, t_k), (K+1) x (M+1)
    std::vector<std::vector<double>> x_hi;  ///< u_D(X,   y_j, t_k)
    std::vector<std::vector<double>> y_lo;  ///< u_D(x_i, floor, t_k), (K+1) x (N+1)
    std::vector<std::vector<double>> y_hi;  ///< u_D(x_i, Y,  t_k)

    int levels() const { return static_cast<int>(x_lo.size()); }
};

/// Payoff-driven profiles for a variance floor zeta > 0: the x-edges extend
/// the payoff in time, the variance edges come from two one-dimensional
/// constant-volatility solves at sigma = sqrt(zeta) and sigma = sqrt(Y),
/// sharing the x-axis and time grid of the 2D run.
BoundaryProfiles make_boundary_profiles(const MarketParams& params, const DomainBox& box, const Payoff& payoff,
                                        const Grid2D& grid, int steps);

/// Degenerate-floor (zeta = 0) variant: the y = 0 edge carries the
/// deterministic-growth price e^{-rt} u_T(x e^{rt}) and the x = X edge is
/// discounted the same way so the two stay compatible in the corner. The
/// y = Y edge still comes from the 1D solve at sigma = sqrt(Y).
BoundaryProfiles make_boundary_profiles_zeta0(const MarketParams& params, const DomainBox& box, const Payoff& payoff,
                                              const Grid2D& grid, int steps);

/// All four edges identically zero (step-payoff portfolios).
BoundaryProfiles homogeneous_boundary_profiles(const Grid2D& grid, int steps);

/// Edges sampled from a known solution u(x, y, t); used by accuracy studies.
BoundaryProfiles exact_boundary_profiles(const Grid2D& grid, const DomainBox& box, int steps,
                                         const std::function<double(double, double, double)>& exact);

}  // namespace hwlod

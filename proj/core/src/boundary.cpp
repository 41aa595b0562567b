#include "hwlod/boundary.hpp"

#include <cmath>
#include <stdexcept>

#include "hwlod/bs1d.hpp"

namespace hwlod {

namespace {

BoundaryProfiles allocate(const Grid2D& grid, int steps) {
    BoundaryProfiles b;
    const std::size_t levels = static_cast<std::size_t>(steps) + 1;
    b.x_lo.assign(levels, std::vector<double>(static_cast<std::size_t>(grid.ny()) + 1, 0.0));
    b.x_hi.assign(levels, std::vector<double>(static_cast<std::size_t>(grid.ny()) + 1, 0.0));
    b.y_lo.assign(levels, std::vector<double>(static_cast<std::size_t>(grid.nx()) + 1, 0.0));
    b.y_hi.assign(levels, std::vector<double>(static_cast<std::size_t>(grid.nx()) + 1, 0.0));
    return b;
}

std::vector<std::vector<double>> edge_from_bs1d(const MarketParams& params, const DomainBox& box,
                                                const Payoff& payoff, const Grid2D& grid, int steps, double sigma) {
    Bs1dProblem p;
    p.sigma = sigma;
    p.r = params.r;
    p.payoff = payoff;
    p.axis = grid.x;
    p.steps = steps;
    p.horizon = box.T;
    return solve_bs1d(p).level;
}

}  // namespace

BoundaryProfiles make_boundary_profiles(const MarketParams& params, const DomainBox& box, const Payoff& payoff,
                                        const Grid2D& grid, int steps) {
    if (!(box.zeta > 0.0))
        throw std::invalid_argument("make_boundary_profiles: zeta must be positive; use the zeta0 builder");
    BoundaryProfiles b = allocate(grid, steps);
    const double at_zero = evaluate_payoff(payoff, 0.0);
    const double at_cap = evaluate_payoff(payoff, box.X);
    for (int k = 0; k <= steps; ++k) {
        for (int j = 0; j <= grid.ny(); ++j) {
            b.x_lo[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = at_zero;
            b.x_hi[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = at_cap;
        }
    }
    b.y_lo = edge_from_bs1d(params, box, payoff, grid, steps, std::sqrt(box.zeta));
    b.y_hi = edge_from_bs1d(params, box, payoff, grid, steps, std::sqrt(box.Y));
    return b;
}

BoundaryProfiles make_boundary_profiles_zeta0(const MarketParams& params, const DomainBox& box, const Payoff& payoff,
                                              const Grid2D& grid, int steps) {
    BoundaryProfiles b = allocate(grid, steps);
    const double tau = box.T / steps;
    const double at_zero = evaluate_payoff(payoff, 0.0);
    for (int k = 0; k <= steps; ++k) {
        const double t = k * tau;
        const double cap = natural_boundary_y0(payoff, params.r, box.X, t, box.X);
        for (int j = 0; j <= grid.ny(); ++j) {
            b.x_lo[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = at_zero;
            b.x_hi[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = cap;
        }
        for (int i = 0; i <= grid.nx(); ++i)
            b.y_lo[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                natural_boundary_y0(payoff, params.r, grid.x.node(i), t, box.X);
    }
    b.y_hi = edge_from_bs1d(params, box, payoff, grid, steps, std::sqrt(box.Y));
    return b;
}

BoundaryProfiles homogeneous_boundary_profiles(const Grid2D& grid, int steps) { return allocate(grid, steps); }

BoundaryProfiles exact_boundary_profiles(const Grid2D& grid, const DomainBox& box, int steps,
                                         const std::function<double(double, double, double)>& exact) {
    BoundaryProfiles b = allocate(grid, steps);
    const double tau = box.T / steps;
    for (int k = 0; k <= steps; ++k) {
        const double t = k * tau;
        auto& xl = b.x_lo[static_cast<std::size_t>(k)];
        auto& xh = b.x_hi[static_cast<std::size_t>(k)];
        for (int j = 0; j <= grid.ny(); ++j) {
            xl[static_cast<std::size_t>(j)] = exact(0.0, grid.y.node(j), t);
            xh[static_cast<std::size_t>(j)] = exact(box.X, grid.y.node(j), t);
        }
        auto& yl = b.y_lo[static_cast<std::size_t>(k)];
        auto& yh = b.y_hi[static_cast<std::size_t>(k)];
        for (int i = 0; i <= grid.nx(); ++i) {
            yl[static_cast<std::size_t>(i)] = exact(grid.x.node(i), grid.y.node(0), t);
            yh[static_cast<std::size_t>(i)] = exact(grid.x.node(i), box.Y, t);
        }
    }
    return b;
}

}  // namespace hwlod

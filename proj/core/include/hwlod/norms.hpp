#pragma once

#include <optional>

#include "hwlod/field.hpp"
#include "hwlod/market.hpp"

namespace hwlod {

/// Closed rectangle for the region-restricted RMSE; edge nodes count.
struct Region {
    double x_lo;
    double x_hi;
    double y_lo;
    double y_hi;

    bool contains(double x, double y) const { return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi; }
    static Region whole(const DomainBox& box) { return {0.0, box.X, box.zeta, box.Y}; }
};

struct GridNorms {
    double c_norm = 0.0;   ///< max |err| over all nodes
    double l2_norm = 0.0;  ///< sqrt(sum hbar_i hbar_j err^2), dual-cell measure
    double rmse = 0.0;     ///< sqrt(mean err^2) over nodes inside the region
    long region_nodes = 0;
};

/// Throws std::invalid_argument when no node falls inside the region.
GridNorms grid_norms(const Field2D& err, const Grid2D& grid, const Region& region);

/// Double-mesh rate log2(e_coarse / e_fine); empty when either error is
/// nonpositive (the rate is undefined there, not zero).
std::optional<double> convergence_rate(double e_coarse, double e_fine);

}  // namespace hwlod

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "hwlod/axis.hpp"

namespace hwlod {

/// Grid-indexed solution values at one time level, stored row-major in the
/// y index so each fixed-j row is contiguous over i.
struct Field2D {
    int nx = 0;  ///< node count in x (N+1)
    int ny = 0;  ///< node count in y (M+1)
    std::vector<double> values;
    double time = 0.0;  ///< time tag of the level

    Field2D() = default;
    Field2D(int nodes_x, int nodes_y, double fill = 0.0)
        : nx(nodes_x), ny(nodes_y), values(static_cast<std::size_t>(nodes_x) * nodes_y, fill) {}

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * nx + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
    double* row(int j) { return values.data() + static_cast<std::size_t>(j) * nx; }
    const double* row(int j) const { return values.data() + static_cast<std::size_t>(j) * nx; }

    double min() const { return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end()); }
    double max() const { return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end()); }
    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Samples f(x_i, y_j) over the grid nodes.
template <typename F>
Field2D sample_field(const Grid2D& grid, F&& f, double time = 0.0) {
    Field2D out(grid.nx() + 1, grid.ny() + 1);
    out.time = time;
    for (int j = 0; j <= grid.ny(); ++j)
        for (int i = 0; i <= grid.nx(); ++i) out.at(i, j) = f(grid.x.node(i), grid.y.node(j));
    return out;
}

}  // namespace hwlod

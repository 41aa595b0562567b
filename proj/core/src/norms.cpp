#include "hwlod/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace hwlod {

GridNorms grid_norms(const Field2D& err, const Grid2D& grid, const Region& region) {
    if (err.nx != grid.nx() + 1 || err.ny != grid.ny() + 1)
        throw std::invalid_argument("grid_norms: field does not match the grid");
    GridNorms out;
    double l2_sq = 0.0;
    double region_sq = 0.0;
    for (int j = 0; j <= grid.ny(); ++j) {
        const double hby = grid.y.hbar(j);
        const double y = grid.y.node(j);
        for (int i = 0; i <= grid.nx(); ++i) {
            const double e = err.at(i, j);
            const double mag = std::abs(e);
            if (mag > out.c_norm) out.c_norm = mag;
            l2_sq += grid.x.hbar(i) * hby * e * e;
            if (region.contains(grid.x.node(i), y)) {
                region_sq += e * e;
                ++out.region_nodes;
            }
        }
    }
    if (out.region_nodes == 0) throw std::invalid_argument("grid_norms: region contains no grid nodes");
    out.l2_norm = std::sqrt(l2_sq);
    out.rmse = std::sqrt(region_sq / static_cast<double>(out.region_nodes));
    return out;
}

std::optional<double> convergence_rate(double e_coarse, double e_fine) {
    if (!(e_coarse > 0.0) || !(e_fine > 0.0)) return std::nullopt;
    return std::log2(e_coarse / e_fine);
}

}  // namespace hwlod

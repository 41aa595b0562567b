#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace hwlod {

/// One-dimensional primal/dual mesh. `nodes` holds x_0..x_N; `mids` holds the
/// dual points x_{-1/2}..x_{N+1/2} with the boundary convention
/// x_{-1/2} = x_0 and x_{N+1/2} = x_N, so mids.size() == nodes.size() + 1.
struct Axis {
    std::vector<double> nodes;
    std::vector<double> mids;
    std::vector<double> primal_widths;  ///< h_i = x_{i+1} - x_i, N entries
    std::vector<double> dual_widths;    ///< hbar_i = x_{i+1/2} - x_{i-1/2}, N+1 entries

    int intervals() const { return static_cast<int>(nodes.size()) - 1; }
    double node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
    double mid_lo(int i) const { return mids[static_cast<std::size_t>(i)]; }      ///< x_{i-1/2}
    double mid_hi(int i) const { return mids[static_cast<std::size_t>(i) + 1]; }  ///< x_{i+1/2}
    double h(int i) const { return primal_widths[static_cast<std::size_t>(i)]; }
    double hbar(int i) const { return dual_widths[static_cast<std::size_t>(i)]; }
};

struct UniformSpec {
    int n;
};

/// Nodes x_i = lo + d sinh(i dEta) with dEta = asinh((hi-lo)/d) / n:
/// widths grow away from lo.
struct SinhOriginSpec {
    int n;
    double d;
};

/// Nodes x_i = lo + strike + c sinh(eta_0 + i dEta) clustered around
/// lo + strike; `strike` is the offset from lo.
struct SinhStrikeSpec {
    int n;
    double strike;
    double c;
};

using AxisSpec = std::variant<UniformSpec, SinhOriginSpec, SinhStrikeSpec>;

/// Builds the axis on [lo, hi]. Endpoints are snapped to lo/hi exactly after
/// the node formula is evaluated so Dirichlet rows index exact coordinates.
Axis build_axis(const AxisSpec& spec, double lo, double hi);

const char* axis_spec_name(const AxisSpec& spec);

/// Tensor-product grid: x-axis on [0, X], y-axis on [zeta, Y].
struct Grid2D {
    Axis x;
    Axis y;

    int nx() const { return x.intervals(); }
    int ny() const { return y.intervals(); }
};

}  // namespace hwlod

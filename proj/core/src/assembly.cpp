#include "hwlod/assembly.hpp"

#include <stdexcept>
#include <vector>

#include "hwlod/flux.hpp"

namespace hwlod {

TridiagonalSystem assemble_fitted_line(const Axis& axis, double a, double b, double alpha, double c, double tau,
                                       std::span<const double> prev, std::span<const double> rhs_extra,
                                       std::pair<double, double> dirichlet) {
    const int n = axis.intervals();
    const std::size_t nodes = static_cast<std::size_t>(n) + 1;
    if (prev.size() != nodes || rhs_extra.size() != nodes)
        throw std::invalid_argument("assemble_fitted_line: row length mismatch");

    TridiagonalSystem sys;
    sys.sub.assign(nodes - 1, 0.0);
    sys.diag.assign(nodes, 0.0);
    sys.super.assign(nodes - 1, 0.0);
    sys.rhs.assign(nodes, 0.0);
    sys.dirichlet_rows = {0, n};

    // face weights, faces[m] sits between nodes m and m+1
    std::vector<FluxWeights> faces(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        faces[static_cast<std::size_t>(m)] = axis.node(m) == 0.0
                                                 ? origin_flux_weights(a, b)
                                                 : interior_flux_weights(a, b, alpha, axis.node(m), axis.node(m + 1));
    }

    sys.diag[0] = 1.0;
    sys.super[0] = 0.0;
    sys.rhs[0] = dirichlet.first;
    for (int i = 1; i < n; ++i) {
        const FluxWeights& wl = faces[static_cast<std::size_t>(i - 1)];
        const FluxWeights& wr = faces[static_cast<std::size_t>(i)];
        const double xm = axis.mid_lo(i);
        const double xp = axis.mid_hi(i);
        const double hb = axis.hbar(i);
        sys.sub[static_cast<std::size_t>(i - 1)] = xm * wl.w_lo;
        sys.super[static_cast<std::size_t>(i)] = -xp * wr.w_hi;
        sys.diag[static_cast<std::size_t>(i)] = hb / tau + hb * c + xm * wl.w_hi - xp * wr.w_lo;
        sys.rhs[static_cast<std::size_t>(i)] = hb / tau * prev[static_cast<std::size_t>(i)] +
                                               rhs_extra[static_cast<std::size_t>(i)];
    }
    sys.sub[static_cast<std::size_t>(n - 1)] = 0.0;
    sys.diag[static_cast<std::size_t>(n)] = 1.0;
    sys.rhs[static_cast<std::size_t>(n)] = dirichlet.second;
    return sys;
}

TridiagonalSystem assemble_x_row(const Axis& x_axis, const XSweepCoeffs& coeffs, double tau,
                                 std::span<const double> prev_row, std::span<const double> g1_row,
                                 std::pair<double, double> dirichlet) {
    std::vector<double> extra(prev_row.size());
    for (std::size_t i = 0; i < extra.size(); ++i)
        extra[i] = g1_row[i] * x_axis.hbar(static_cast<int>(i));
    return assemble_fitted_line(x_axis, coeffs.a_bar, coeffs.b_bar, coeffs.alpha_bar, coeffs.c1, tau, prev_row, extra,
                                dirichlet);
}

TridiagonalSystem assemble_y_column(const Axis& y_axis, const YSweepCoeffs& coeffs, double tau,
                                    std::span<const double> half_col, std::span<const double> mixed_col,
                                    std::span<const double> g2_col, std::pair<double, double> dirichlet) {
    if (mixed_col.size() != half_col.size() || g2_col.size() != half_col.size())
        throw std::invalid_argument("assemble_y_column: column length mismatch");
    std::vector<double> extra(half_col.size());
    for (std::size_t j = 0; j < extra.size(); ++j)
        extra[j] = mixed_col[j] + g2_col[j] * y_axis.hbar(static_cast<int>(j));
    return assemble_fitted_line(y_axis, coeffs.a_hat, coeffs.b_hat, coeffs.alpha_hat, coeffs.c2, tau, half_col, extra,
                                dirichlet);
}

}  // namespace hwlod

#pragma once

#include <span>
#include <utility>

#include "hwlod/axis.hpp"
#include "hwlod/coefficients.hpp"
#include "hwlod/tridiagonal.hpp"

namespace hwlod {

/// Builds the implicit-Euler fitted finite-volume system for one sweep line.
/// Interior row i of the conservative operator -(x (a x u' + b u))' + c u:
///
///   [hbar_i/tau + hbar_i c + x_{i-1/2} w_hi^- - x_{i+1/2} w_lo^+] u_i
///     + x_{i-1/2} w_lo^- u_{i-1} - x_{i+1/2} w_hi^+ u_{i+1}
///   = hbar_i/tau prev_i + rhs_extra_i
///
/// where w^-/w^+ are the fitted face weights on [x_{i-1},x_i] / [x_i,x_{i+1}].
/// A face whose lower node sits at coordinate 0 uses the degenerate origin
/// weights. Rows 0 and N are identity rows carrying `dirichlet`.
TridiagonalSystem assemble_fitted_line(const Axis& axis, double a, double b, double alpha, double c, double tau,
                                       std::span<const double> prev, std::span<const double> rhs_extra,
                                       std::pair<double, double> dirichlet);

/// Asset-direction row at one variance level: source values g1 are scaled by
/// the dual widths internally.
TridiagonalSystem assemble_x_row(const Axis& x_axis, const XSweepCoeffs& coeffs, double tau,
                                 std::span<const double> prev_row, std::span<const double> g1_row,
                                 std::pair<double, double> dirichlet);

/// Variance-direction column: the explicit mixed-derivative contribution
/// enters the load vector as-is, source values g2 are scaled by dual widths.
TridiagonalSystem assemble_y_column(const Axis& y_axis, const YSweepCoeffs& coeffs, double tau,
                                    std::span<const double> half_col, std::span<const double> mixed_col,
                                    std::span<const double> g2_col, std::pair<double, double> dirichlet);

}  // namespace hwlod

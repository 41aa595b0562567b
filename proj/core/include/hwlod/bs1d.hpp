#pragma once

#include <vector>

#include "hwlod/axis.hpp"
#include "hwlod/payoff.hpp"
#include "hwlod/tridiagonal.hpp"

namespace hwlod {

/// One-dimensional constant-volatility pricing problem on [0, X], marched
/// forward from the payoff in reversed time. The conservative form
///   u_t - (x (a x u_x + b u))_x + c u = 0,  a = sigma^2/2, b = r - sigma^2,
///   c = 2r - sigma^2
/// expands to the usual operator u_t - a x^2 u_xx - r x u_x + r u = 0, which
/// fixes b and c; see the symbolic unit check.
struct Bs1dProblem {
    double sigma = 0.0;  ///< volatility, >= 0 (sigma = 0 degenerates cleanly)
    double r = 0.0;
    Payoff payoff;
    Axis axis;      ///< asset axis on [0, X]
    int steps = 1;  ///< time levels K, step tau = horizon / K
    double horizon = 1.0;
};

/// Time-indexed node profiles: level[k][i] = u(x_i, t_k), level[0] = payoff.
struct Bs1dSolution {
    std::vector<std::vector<double>> level;
    bool m_matrix_ok = false;     ///< sign/dominance verification of the sweep matrix
    MMatrixReport matrix_report;  ///< details when the check fails
};

/// Implicit-Euler fitted finite-volume march. Dirichlet values are the
/// payoff extensions u_T(0) and u_T(X) at both ends, constant in time.
Bs1dSolution solve_bs1d(const Bs1dProblem& problem);

}  // namespace hwlod

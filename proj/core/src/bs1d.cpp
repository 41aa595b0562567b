#include "hwlod/bs1d.hpp"

#include <stdexcept>

#include "hwlod/assembly.hpp"
#include "hwlod/coefficients.hpp"

namespace hwlod {

namespace {

XSweepCoeffs bs1d_coefficients(double sigma, double r) {
    XSweepCoeffs c{};
    c.a_bar = 0.5 * sigma * sigma;
    c.b_bar = r - sigma * sigma;
    c.c1 = 2.0 * r - sigma * sigma;
    c.degenerate = c.a_bar < kDegenerateDiffusionEps;
    if (c.degenerate) {
        c.alpha_bar = (c.b_bar > 0.0 ? kAlphaFallback : c.b_bar < 0.0 ? -kAlphaFallback : 0.0);
    } else {
        c.alpha_bar = c.b_bar / c.a_bar;
    }
    return c;
}

}  // namespace

Bs1dSolution solve_bs1d(const Bs1dProblem& problem) {
    if (problem.sigma < 0.0) throw std::invalid_argument("solve_bs1d: sigma must be nonnegative");
    if (problem.steps < 1) throw std::invalid_argument("solve_bs1d: needs at least one time step");
    const int n = problem.axis.intervals();
    const std::size_t nodes = static_cast<std::size_t>(n) + 1;
    const double tau = problem.horizon / problem.steps;

    Bs1dSolution out;
    out.level.assign(static_cast<std::size_t>(problem.steps) + 1, std::vector<double>(nodes));
    for (int i = 0; i <= n; ++i)
        out.level[0][static_cast<std::size_t>(i)] = evaluate_payoff(problem.payoff, problem.axis.node(i));

    const XSweepCoeffs coeffs = bs1d_coefficients(problem.sigma, problem.r);
    const std::pair<double, double> bc{out.level[0].front(), out.level[0].back()};
    const std::vector<double> zero(nodes, 0.0);

    // The matrix is time-independent: assemble from the payoff level, factor
    // once, and re-run only the load vector per step.
    TridiagonalSystem sys = assemble_x_row(problem.axis, coeffs, tau, out.level[0], zero, bc);
    out.matrix_report = check_m_matrix(sys);
    out.m_matrix_ok = out.matrix_report.is_m_matrix_after_reduction;
    FactoredTridiag factored(sys);

    std::vector<double> rhs(nodes);
    for (int k = 1; k <= problem.steps; ++k) {
        const std::vector<double>& prev = out.level[static_cast<std::size_t>(k) - 1];
        rhs.front() = bc.first;
        for (int i = 1; i < n; ++i)
            rhs[static_cast<std::size_t>(i)] = problem.axis.hbar(i) / tau * prev[static_cast<std::size_t>(i)];
        rhs.back() = bc.second;
        factored.solve(rhs, out.level[static_cast<std::size_t>(k)]);
    }
    return out;
}

}  // namespace hwlod

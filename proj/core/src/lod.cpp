#include "hwlod/lod.hpp"

#include <algorithm>
#include <cmath>

namespace hwlod {

namespace {

// Shared mixed-derivative stencil with the face coefficients already
// evaluated; both the public entry point and the stepper's cached path land
// here so the two are bit-identical.
double mixed_term_impl(const Field2D& u, const Grid2D& grid, double k_up, double k_dn, int i, int j) {
    const int n = grid.nx();
    if (i == 0) {
        const double h0 = grid.x.h(0);
        const double d_up = (u.at(1, j + 1) - u.at(0, j + 1) + u.at(1, j) - u.at(0, j)) / h0;
        const double d_dn = (u.at(1, j) - u.at(0, j) + u.at(1, j - 1) - u.at(0, j - 1)) / h0;
        return 0.5 * (k_up * d_up - k_dn * d_dn);
    }
    if (i == n) {
        const double hn = grid.x.h(n - 1);
        const double d_up = (u.at(n, j + 1) - u.at(n - 1, j + 1) + u.at(n, j) - u.at(n - 1, j)) / hn;
        const double d_dn = (u.at(n, j) - u.at(n - 1, j) + u.at(n, j - 1) - u.at(n - 1, j - 1)) / hn;
        return 0.5 * (k_up * d_up - k_dn * d_dn);
    }
    const double hi = grid.x.h(i);
    const double hm = grid.x.h(i - 1);
    const double d_up = (u.at(i + 1, j + 1) - u.at(i, j + 1) + u.at(i + 1, j) - u.at(i, j)) / hi +
                        (u.at(i, j + 1) - u.at(i - 1, j + 1) + u.at(i, j) - u.at(i - 1, j)) / hm;
    const double d_dn = (u.at(i + 1, j) - u.at(i, j) + u.at(i + 1, j - 1) - u.at(i, j - 1)) / hi +
                        (u.at(i, j) - u.at(i - 1, j) + u.at(i, j - 1) - u.at(i - 1, j - 1)) / hm;
    return 0.25 * (k_up * d_up - k_dn * d_dn);
}

}  // namespace

double mixed_term(const Field2D& u_half, const Grid2D& grid, const MarketParams& params, int i, int j) {
    if (j < 1 || j > grid.ny() - 1) throw std::invalid_argument("mixed_term: j must be an interior variance index");
    const double k_up = mixed_coefficient(params, grid.x.node(i), grid.y.mid_hi(j));
    const double k_dn = mixed_coefficient(params, grid.x.node(i), grid.y.mid_lo(j));
    return mixed_term_impl(u_half, grid, k_up, k_dn, i, j);
}

LodSolver::LodSolver(const Grid2D& grid, const MarketParams& params, const DomainBox& box, const LodConfig& config,
                     const BoundaryProfiles& boundary, SourceFn source)
    : grid_(grid), params_(params), box_(box), config_(config), boundary_(&boundary),
      source_{std::move(source), config.source_weight_x} {
    params_.validate();
    box_.validate();
    if (config_.steps < 0) throw std::invalid_argument("LodConfig.steps: must be nonnegative");
    if (config_.steps == 0) return;  // degenerate run: solve() returns the initial field
    if (!(config_.source_weight_x >= 0.0 && config_.source_weight_x <= 1.0))
        throw std::invalid_argument("LodConfig.source_weight_x: must lie in [0,1]");
    if (boundary_->levels() < config_.steps + 1)
        throw std::invalid_argument("LodSolver: boundary profiles cover fewer levels than config.steps");
    tau_ = box_.T / config_.steps;

    const int n = grid_.nx();
    const int m = grid_.ny();
    const std::vector<double> zeros_x(static_cast<std::size_t>(n) + 1, 0.0);
    const std::vector<double> zeros_y(static_cast<std::size_t>(m) + 1, 0.0);

    x_rows_.reserve(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        const XSweepCoeffs coeffs = xsweep_coefficients(params_, grid_.y.node(j));
        TridiagonalSystem sys = assemble_x_row(grid_.x, coeffs, tau_, zeros_x, zeros_x, {0.0, 0.0});
        if (config_.check_matrices) {
            MMatrixReport rep = check_m_matrix(sys);
            if (!rep.is_m_matrix_after_reduction) {
                x_diag_.all_pass = false;
                x_diag_.failing_lines.push_back(j);
                if (x_diag_.first_detail.empty())
                    x_diag_.first_detail = "x-sweep row j=" + std::to_string(j) + ": " + rep.detail;
            }
        }
        try {
            x_rows_.emplace_back(sys);
        } catch (const SingularSystemError& e) {
            throw SolverFailure("x-sweep row j=" + std::to_string(j) + ": " + e.what());
        }
    }

    const YSweepCoeffs ycoeffs = ysweep_coefficients(params_, 0.0, grid_.y.node(0));
    TridiagonalSystem ysys = assemble_y_column(grid_.y, ycoeffs, tau_, zeros_y, zeros_y, zeros_y, {0.0, 0.0});
    if (config_.check_matrices) {
        MMatrixReport rep = check_m_matrix(ysys);
        if (!rep.is_m_matrix_after_reduction) {
            y_diag_.all_pass = false;
            y_diag_.failing_lines.push_back(0);
            y_diag_.first_detail = "y-sweep column system: " + rep.detail;
        }
    }
    try {
        y_column_ = FactoredTridiag(ysys);
    } catch (const SingularSystemError& e) {
        throw SolverFailure(std::string("y-sweep column system: ") + e.what());
    }

    k_face_.resize(static_cast<std::size_t>(m) * (n + 1));
    for (int f = 0; f < m; ++f)
        for (int i = 0; i <= n; ++i)
            k_face_[static_cast<std::size_t>(f) * (n + 1) + i] =
                mixed_coefficient(params_, grid_.x.node(i), grid_.y.mid_hi(f));
}

Field2D LodSolver::x_sweep(const Field2D& state, int k_next) const {
    const int n = grid_.nx();
    const int m = grid_.ny();
    const double t_next = k_next * tau_;
    const auto& edge_lo = boundary_->x_lo[static_cast<std::size_t>(k_next)];
    const auto& edge_hi = boundary_->x_hi[static_cast<std::size_t>(k_next)];

    Field2D half(n + 1, m + 1);
    half.time = t_next;
    std::vector<double> rhs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= m; ++j) {
        const double* prev = state.row(j);
        rhs.front() = edge_lo[static_cast<std::size_t>(j)];
        rhs.back() = edge_hi[static_cast<std::size_t>(j)];
        if (source_.g) {
            const double y = grid_.y.node(j);
            for (int i = 1; i < n; ++i) {
                const double hb = grid_.x.hbar(i);
                rhs[static_cast<std::size_t>(i)] =
                    hb / tau_ * prev[i] + source_.g1(grid_.x.node(i), y, t_next) * hb;
            }
        } else {
            for (int i = 1; i < n; ++i)
                rhs[static_cast<std::size_t>(i)] = grid_.x.hbar(i) / tau_ * prev[i];
        }
        x_rows_[static_cast<std::size_t>(j)].solve(rhs, std::span<double>(half.row(j), rhs.size()));
    }
    return half;
}

Field2D LodSolver::y_sweep(const Field2D& half, int k_next) const {
    const int n = grid_.nx();
    const int m = grid_.ny();
    const double t_next = k_next * tau_;
    const auto& edge_lo = boundary_->y_lo[static_cast<std::size_t>(k_next)];
    const auto& edge_hi = boundary_->y_hi[static_cast<std::size_t>(k_next)];

    Field2D next(n + 1, m + 1);
    next.time = t_next;
    std::vector<double> rhs(static_cast<std::size_t>(m) + 1), column(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= n; ++i) {
        rhs.front() = edge_lo[static_cast<std::size_t>(i)];
        rhs.back() = edge_hi[static_cast<std::size_t>(i)];
        const double x = grid_.x.node(i);
        for (int j = 1; j < m; ++j) {
            const double hb = grid_.y.hbar(j);
            double v = hb / tau_ * half.at(i, j) + mixed_term_impl(half, grid_, face_k(i, j), face_k(i, j - 1), i, j);
            if (source_.g) v += source_.g2(x, grid_.y.node(j), t_next) * hb;
            rhs[static_cast<std::size_t>(j)] = v;
        }
        y_column_.solve(rhs, column);
        for (int j = 0; j <= m; ++j) next.at(i, j) = column[static_cast<std::size_t>(j)];
    }
    return next;
}

Field2D LodSolver::advance(const Field2D& state, int k_next) const { return y_sweep(x_sweep(state, k_next), k_next); }

SolveRecord LodSolver::solve(const Field2D& initial) const {
    if (initial.nx != grid_.nx() + 1 || initial.ny != grid_.ny() + 1)
        throw std::invalid_argument("LodSolver::solve: initial field does not match the grid");
    SolveRecord record;
    record.x_matrices = x_diag_;
    record.y_matrix = y_diag_;
    record.steps = config_.steps;

    Field2D u = initial;
    u.time = 0.0;
    record.step_min.reserve(static_cast<std::size_t>(config_.steps));
    for (int k = 1; k <= config_.steps; ++k) {
        u = advance(u, k);
        if (config_.abort_on_nan && !u.all_finite())
            throw SolverFailure("non-finite solution values after step " + std::to_string(k));
        record.step_min.push_back(u.min());
        if (std::find(config_.snapshot_steps.begin(), config_.snapshot_steps.end(), k) !=
            config_.snapshot_steps.end())
            record.snapshots.emplace_back(k, u);
    }
    record.final_field = std::move(u);
    return record;
}

SolveRecord solve_lod(const LodProblem& problem, const Grid2D& grid, const LodConfig& config) {
    if (config.steps == 0) {
        SolveRecord record;
        record.final_field = problem.initial;
        record.steps = 0;
        return record;
    }
    LodSolver solver(grid, problem.params, problem.box, config, problem.boundary, problem.source);
    return solver.solve(problem.initial);
}

}  // namespace hwlod

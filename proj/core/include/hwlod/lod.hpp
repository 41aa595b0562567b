#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hwlod/assembly.hpp"
#include "hwlod/boundary.hpp"
#include "hwlod/coefficients.hpp"
#include "hwlod/field.hpp"
#include "hwlod/market.hpp"

namespace hwlod {

/// Explicit mixed-derivative contribution [k u_x] differenced across the two
/// variance faces of the cell around (i, j), 1 <= j <= ny-1. Interior columns
/// use the averaged central stencil; the first and last columns fall back to
/// one-sided differences in x.
double mixed_term(const Field2D& u_half, const Grid2D& grid, const MarketParams& params, int i, int j);

/// Time-stepping configuration. The mixed-derivative term is always sourced
/// from the half-step field, which keeps every column solve tridiagonal.
struct LodConfig {
    int steps = 1;                 ///< time levels K; tau = T / K
    double source_weight_x = 0.5;  ///< share of the source fed to the asset sweep
    std::vector<int> snapshot_steps;
    bool check_matrices = true;  ///< run the M-matrix verification at setup
    bool abort_on_nan = true;    ///< stop with step context on non-finite values
};

/// Everything a single run needs besides the grid.
struct LodProblem {
    MarketParams params;
    DomainBox box;
    SourceFn source;             ///< g(x,y,t); empty means zero
    Field2D initial;             ///< u at t = 0 on the grid nodes
    BoundaryProfiles boundary;   ///< steps+1 time levels
};

struct SweepMatrixDiagnostics {
    bool all_pass = true;
    std::vector<int> failing_lines;  ///< x-sweep row indices / single y entry
    std::string first_detail;
};

struct SolveRecord {
    Field2D final_field;
    std::vector<std::pair<int, Field2D>> snapshots;
    std::vector<double> step_min;  ///< min over the grid after each full step
    SweepMatrixDiagnostics x_matrices;
    SweepMatrixDiagnostics y_matrix;
    int steps = 0;
};

struct SolverFailure : std::runtime_error {
    explicit SolverFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Locally one-dimensional stepper: per time step one implicit fitted sweep
/// along x (all rows, including the variance-edge rows, evolve under the same
/// operator), then one along y with the mixed term taken explicitly from the
/// half-step field. Dirichlet data is imposed only in the sweep's own
/// direction. Both sweep matrices are time-independent, so they are
/// assembled and factored once at construction.
class LodSolver {
public:
    /// `boundary` is held by reference and must outlive the solver.
    LodSolver(const Grid2D& grid, const MarketParams& params, const DomainBox& box, const LodConfig& config,
              const BoundaryProfiles& boundary, SourceFn source = {});

    /// Half step: one tridiagonal solve per row j; columns 0 and nx take the
    /// x-edge Dirichlet data at level k_next.
    Field2D x_sweep(const Field2D& state, int k_next) const;

    /// Full step completion: one solve per column i; rows 0 and ny take the
    /// variance-edge Dirichlet data at level k_next.
    Field2D y_sweep(const Field2D& half, int k_next) const;

    Field2D advance(const Field2D& state, int k_next) const;

    SolveRecord solve(const Field2D& initial) const;

    double tau() const { return tau_; }
    const SweepMatrixDiagnostics& x_matrix_diagnostics() const { return x_diag_; }
    const SweepMatrixDiagnostics& y_matrix_diagnostics() const { return y_diag_; }

private:
    Grid2D grid_;
    MarketParams params_;
    DomainBox box_;
    LodConfig config_;
    const BoundaryProfiles* boundary_;
    SourceSplit source_;
    double tau_ = 0.0;

    std::vector<FactoredTridiag> x_rows_;  ///< one factorization per row j
    FactoredTridiag y_column_;             ///< coefficients do not depend on x
    SweepMatrixDiagnostics x_diag_;
    SweepMatrixDiagnostics y_diag_;
    std::vector<double> k_face_;  ///< mixed coefficient at (x_i, y-face m), m-major

    double face_k(int i, int m) const { return k_face_[static_cast<std::size_t>(m) * (grid_.nx() + 1) + i]; }
};

/// Convenience wrapper: builds the solver and marches problem.initial through
/// config.steps levels. steps == 0 returns the initial field unchanged.
SolveRecord solve_lod(const LodProblem& problem, const Grid2D& grid, const LodConfig& config);

}  // namespace hwlod

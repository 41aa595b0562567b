#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hwlod/lod.hpp"
#include "hwlod/norms.hpp"

namespace hwlod {

/// One fully prepared run: grid plus everything solve_lod needs.
struct PreparedRun {
    Grid2D grid;
    LodProblem problem;
    LodConfig config;
};

using RunFactory = std::function<PreparedRun(int n, int m, int k)>;

struct LadderEntry {
    int n;
    int m;
    int k;
};

struct ConvergenceRow {
    std::string label;
    int n = 0, m = 0, k = 0;
    double e_c = 0.0, e_l2 = 0.0, e_rmse = 0.0;
    std::optional<double> rc_c, rc_l2, rc_rmse;
    double min_over_steps = 0.0;  ///< smallest per-step field minimum of the run
};

enum class StudyMode { ExactSolution, FineReference };

/// Mesh-ladder convergence study. In ExactSolution mode the error is taken
/// against `exact` evaluated at the final time on each ladder grid; in
/// FineReference mode against the run on `reference`, interpolated
/// bilinearly onto the coarse nodes (coincident nodes bypass interpolation).
struct StudyConfig {
    StudyMode mode = StudyMode::ExactSolution;
    RunFactory factory;
    std::vector<LadderEntry> ladder;
    Region region{0.0, 0.0, 0.0, 0.0};
    std::function<double(double x, double y)> exact;  ///< ExactSolution mode
    std::optional<LadderEntry> reference;             ///< FineReference mode
};

std::vector<ConvergenceRow> run_convergence_study(const StudyConfig& config);

/// Bilinear interpolation of a nodal field; clamps to the grid hull. Nodes
/// matching within 1e-12 of a grid line use that line exactly.
double interpolate_field(const Field2D& field, const Grid2D& grid, double x, double y);

}  // namespace hwlod

#include "hwlod/study.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hwlod {

namespace {

// Index of the interval containing c, with a 1e-12-relative snap onto nodes.
struct Bracket {
    int lo;
    double weight;  // 0 -> node lo, 1 -> node lo+1
};

Bracket bracket(const std::vector<double>& nodes, double c) {
    const double span = nodes.back() - nodes.front();
    const double snap = 1e-12 * span;
    if (c <= nodes.front() + snap) return {0, 0.0};
    if (c >= nodes.back() - snap) return {static_cast<int>(nodes.size()) - 2, 1.0};
    auto it = std::upper_bound(nodes.begin(), nodes.end(), c);
    int hi = static_cast<int>(it - nodes.begin());
    int lo = hi - 1;
    if (std::abs(c - nodes[static_cast<std::size_t>(lo)]) <= snap) return {lo, 0.0};
    if (std::abs(nodes[static_cast<std::size_t>(hi)] - c) <= snap) return {lo, 1.0};
    double w = (c - nodes[static_cast<std::size_t>(lo)]) /
               (nodes[static_cast<std::size_t>(hi)] - nodes[static_cast<std::size_t>(lo)]);
    return {lo, w};
}

}  // namespace

double interpolate_field(const Field2D& field, const Grid2D& grid, double x, double y) {
    const Bracket bx = bracket(grid.x.nodes, x);
    const Bracket by = bracket(grid.y.nodes, y);
    const double v00 = field.at(bx.lo, by.lo);
    const double v10 = field.at(bx.lo + 1, by.lo);
    const double v01 = field.at(bx.lo, by.lo + 1);
    const double v11 = field.at(bx.lo + 1, by.lo + 1);
    return (1.0 - bx.weight) * (1.0 - by.weight) * v00 + bx.weight * (1.0 - by.weight) * v10 +
           (1.0 - bx.weight) * by.weight * v01 + bx.weight * by.weight * v11;
}

std::vector<ConvergenceRow> run_convergence_study(const StudyConfig& config) {
    if (config.ladder.size() < 1) throw std::invalid_argument("run_convergence_study: empty mesh ladder");
    if (config.mode == StudyMode::ExactSolution && !config.exact)
        throw std::invalid_argument("run_convergence_study: exact-solution mode needs the exact evaluator");
    if (config.mode == StudyMode::FineReference && !config.reference)
        throw std::invalid_argument("run_convergence_study: fine-reference mode needs a reference entry");

    Field2D reference_field;
    Grid2D reference_grid;
    if (config.mode == StudyMode::FineReference) {
        PreparedRun ref = config.factory(config.reference->n, config.reference->m, config.reference->k);
        reference_field = solve_lod(ref.problem, ref.grid, ref.config).final_field;
        reference_grid = ref.grid;
    }

    std::vector<ConvergenceRow> rows;
    rows.reserve(config.ladder.size());
    for (const LadderEntry& entry : config.ladder) {
        PreparedRun run = config.factory(entry.n, entry.m, entry.k);
        SolveRecord record = solve_lod(run.problem, run.grid, run.config);

        Field2D err(run.grid.nx() + 1, run.grid.ny() + 1);
        for (int j = 0; j <= run.grid.ny(); ++j) {
            for (int i = 0; i <= run.grid.nx(); ++i) {
                const double x = run.grid.x.node(i);
                const double y = run.grid.y.node(j);
                const double truth = config.mode == StudyMode::ExactSolution
                                         ? config.exact(x, y)
                                         : interpolate_field(reference_field, reference_grid, x, y);
                err.at(i, j) = record.final_field.at(i, j) - truth;
            }
        }
        GridNorms norms = grid_norms(err, run.grid, config.region);

        ConvergenceRow row;
        row.label = std::to_string(entry.n) + "x" + std::to_string(entry.m) + "x" + std::to_string(entry.k);
        row.n = entry.n;
        row.m = entry.m;
        row.k = entry.k;
        row.e_c = norms.c_norm;
        row.e_l2 = norms.l2_norm;
        row.e_rmse = norms.rmse;
        row.min_over_steps =
            record.step_min.empty() ? record.final_field.min()
                                    : *std::min_element(record.step_min.begin(), record.step_min.end());
        if (!rows.empty()) {
            row.rc_c = convergence_rate(rows.back().e_c, row.e_c);
            row.rc_l2 = convergence_rate(rows.back().e_l2, row.e_l2);
            row.rc_rmse = convergence_rate(rows.back().e_rmse, row.e_rmse);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace hwlod

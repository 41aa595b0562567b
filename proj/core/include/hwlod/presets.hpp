#pragma once

#include <string>
#include <vector>

#include "hwlod/study.hpp"

namespace hwlod {

enum class ProblemId { Tp1, Tp2, Tp3, Manufactured, Custom };

/// A continuous problem the CLI and the studies can instantiate on any grid.
/// `manufactured` switches the source and every boundary edge to the smooth
/// reference solution; `homogeneous_bc` zeroes all four edges.
struct ProblemSetup {
    ProblemId id = ProblemId::Custom;
    MarketParams params;
    DomainBox box;
    Payoff payoff = RampPayoff{0.5};
    bool manufactured = false;
    bool homogeneous_bc = false;

    void validate() const;
};

/// Vanilla call, X=100, Y=1, E=57.
ProblemSetup tp1_setup();
/// Cash-or-nothing call, X=100, Y=0.36, B=1, E=57.
ProblemSetup tp2_setup();
/// Butterfly step portfolio with homogeneous edges, X=100, Y=0.36.
ProblemSetup tp3_setup();
/// Smooth-solution accuracy configuration on the unit box, zeta=0.01.
ProblemSetup manufactured_setup(double rho, double r, double mu);

/// Builds grid, boundary data, initial field and config for one run.
/// Variance-floor handling follows box.zeta: zero selects the natural
/// boundary condition and the discounted price cap.
PreparedRun prepare_run(const ProblemSetup& setup, const AxisSpec& x_spec, const AxisSpec& y_spec, int steps,
                        const LodConfig& base = {});

ProblemId problem_id_from_string(const std::string& name);
const char* problem_id_name(ProblemId id);

/// One titled block of ladder rows (a table may compare two mesh families or
/// two parameter sets side by side).
struct TableBlock {
    std::string title;
    std::vector<ConvergenceRow> rows;
};

struct TableResult {
    std::string id;
    std::string description;
    std::vector<std::string> norms;  ///< subset of {"c", "l2", "rmse"} to display
    std::vector<TableBlock> blocks;
};

/// Built-in convergence-study presets t1..t6; `quick` shrinks the ladders and
/// the reference runs for smoke testing.
TableResult run_table(const std::string& id, bool quick = false);

std::vector<std::string> table_ids();

}  // namespace hwlod

#include "hwlod/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "hwlod/manufactured.hpp"

namespace hwlod {

void ProblemSetup::validate() const {
    params.validate();
    box.validate();
    validate_payoff(payoff, box.X);
}

ProblemSetup tp1_setup() {
    ProblemSetup s;
    s.id = ProblemId::Tp1;
    s.params = {.r = 0.1, .xi = 1.0, .mu = 0.0, .rho = 0.9, .beta = 0.0};
    s.box = {.X = 100.0, .Y = 1.0, .T = 1.0, .zeta = 0.01};
    s.payoff = RampPayoff{57.0};
    return s;
}

ProblemSetup tp2_setup() {
    ProblemSetup s;
    s.id = ProblemId::Tp2;
    s.params = {.r = 0.1, .xi = 1.0, .mu = 0.0, .rho = 0.9, .beta = 0.0};
    s.box = {.X = 100.0, .Y = 0.36, .T = 1.0, .zeta = 0.01};
    s.payoff = CashOrNothingPayoff{1.0, 57.0};
    return s;
}

ProblemSetup tp3_setup() {
    ProblemSetup s;
    s.id = ProblemId::Tp3;
    s.params = {.r = 0.1, .xi = 1.0, .mu = 0.0, .rho = 0.9, .beta = 0.0};
    s.box = {.X = 100.0, .Y = 0.36, .T = 1.0, .zeta = 0.01};
    s.payoff = ButterflyPayoff{40.0, 50.0, 60.0};
    s.homogeneous_bc = true;
    return s;
}

ProblemSetup manufactured_setup(double rho, double r, double mu) {
    ProblemSetup s;
    s.id = ProblemId::Manufactured;
    s.params = {.r = r, .xi = 1.0, .mu = mu, .rho = rho, .beta = 0.0};
    s.box = {.X = 1.0, .Y = 1.0, .T = 1.0, .zeta = 0.01};
    s.manufactured = true;
    return s;
}

PreparedRun prepare_run(const ProblemSetup& setup, const AxisSpec& x_spec, const AxisSpec& y_spec, int steps,
                        const LodConfig& base) {
    setup.validate();
    PreparedRun run;
    run.grid.x = build_axis(x_spec, 0.0, setup.box.X);
    run.grid.y = build_axis(y_spec, setup.box.zeta, setup.box.Y);
    run.config = base;
    run.config.steps = steps;

    run.problem.params = setup.params;
    run.problem.box = setup.box;
    if (setup.manufactured) {
        const MarketParams params = setup.params;
        run.problem.source = [params](double x, double y, double t) {
            return manufactured_source(params, x, y, t);
        };
        run.problem.boundary = exact_boundary_profiles(run.grid, setup.box, steps, manufactured_value);
        run.problem.initial = sample_field(run.grid, [](double x, double y) { return manufactured_value(x, y, 0.0); });
    } else {
        if (setup.homogeneous_bc)
            run.problem.boundary = homogeneous_boundary_profiles(run.grid, steps);
        else if (setup.box.zeta == 0.0)
            run.problem.boundary = make_boundary_profiles_zeta0(setup.params, setup.box, setup.payoff, run.grid, steps);
        else
            run.problem.boundary = make_boundary_profiles(setup.params, setup.box, setup.payoff, run.grid, steps);
        const Payoff& payoff = setup.payoff;
        run.problem.initial =
            sample_field(run.grid, [&payoff](double x, double) { return evaluate_payoff(payoff, x); });
    }
    return run;
}

ProblemId problem_id_from_string(const std::string& name) {
    if (name == "tp1") return ProblemId::Tp1;
    if (name == "tp2") return ProblemId::Tp2;
    if (name == "tp3") return ProblemId::Tp3;
    if (name == "manufactured") return ProblemId::Manufactured;
    if (name == "custom") return ProblemId::Custom;
    throw std::invalid_argument("unknown problem '" + name + "' (expected tp1|tp2|tp3|manufactured|custom)");
}

const char* problem_id_name(ProblemId id) {
    switch (id) {
        case ProblemId::Tp1: return "tp1";
        case ProblemId::Tp2: return "tp2";
        case ProblemId::Tp3: return "tp3";
        case ProblemId::Manufactured: return "manufactured";
        default: return "custom";
    }
}

namespace {

RunFactory uniform_factory(const ProblemSetup& setup) {
    return [setup](int n, int m, int k) { return prepare_run(setup, UniformSpec{n}, UniformSpec{m}, k); };
}

RunFactory graded_x_factory(const ProblemSetup& setup, bool origin_graded) {
    return [setup, origin_graded](int n, int m, int k) {
        AxisSpec xs;
        if (origin_graded) {
            xs = SinhOriginSpec{n, setup.box.X / 700.0};
        } else {
            const double strike = std::get<CashOrNothingPayoff>(setup.payoff).strike;
            xs = SinhStrikeSpec{n, strike, strike / 5.0};
        }
        return prepare_run(setup, xs, UniformSpec{m}, k);
    };
}

std::vector<LadderEntry> square_ladder(std::vector<int> ns, int k) {
    std::vector<LadderEntry> out;
    for (int n : ns) out.push_back({n, n, k});
    return out;
}

std::vector<LadderEntry> self_timed_ladder(std::vector<int> ns) {
    std::vector<LadderEntry> out;
    for (int n : ns) out.push_back({n, n, 2 * n});
    return out;
}

TableResult spatial_table(bool quick) {
    TableResult result{"t1", "manufactured-solution spatial refinement, uniform meshes", {"c", "l2"}, {}};
    const std::vector<int> ns = quick ? std::vector<int>{8, 16, 32} : std::vector<int>{8, 16, 32, 64, 128};
    const int k = quick ? 256 : 4096;
    for (auto [rho, r, mu] : {std::tuple{0.5, 0.0, 0.0}, std::tuple{0.9, 0.1, 0.1}}) {
        ProblemSetup setup = manufactured_setup(rho, r, mu);
        StudyConfig cfg;
        cfg.mode = StudyMode::ExactSolution;
        cfg.factory = uniform_factory(setup);
        cfg.ladder = square_ladder(ns, k);
        cfg.region = Region::whole(setup.box);
        const double T = setup.box.T;
        cfg.exact = [T](double x, double y) { return manufactured_value(x, y, T); };
        result.blocks.push_back({"rho=" + std::to_string(rho).substr(0, 3) + " r=" + std::to_string(r).substr(0, 3) +
                                     " mu=" + std::to_string(mu).substr(0, 3),
                                 run_convergence_study(cfg)});
    }
    return result;
}

TableResult temporal_table(bool quick) {
    TableResult result{"t2", "manufactured-solution temporal refinement, fixed spatial mesh", {"c", "l2"}, {}};
    const int n = quick ? 64 : 512;
    const std::vector<int> ks = quick ? std::vector<int>{4, 8, 16} : std::vector<int>{16, 32, 64, 128, 256};
    for (auto [rho, r, mu] : {std::tuple{0.5, 0.0, 0.0}, std::tuple{0.9, 0.1, 0.1}}) {
        ProblemSetup setup = manufactured_setup(rho, r, mu);
        StudyConfig cfg;
        cfg.mode = StudyMode::ExactSolution;
        cfg.factory = uniform_factory(setup);
        for (int k : ks) cfg.ladder.push_back({n, n, k});
        cfg.region = Region::whole(setup.box);
        const double T = setup.box.T;
        cfg.exact = [T](double x, double y) { return manufactured_value(x, y, T); };
        result.blocks.push_back({"rho=" + std::to_string(rho).substr(0, 3) + " r=" + std::to_string(r).substr(0, 3) +
                                     " mu=" + std::to_string(mu).substr(0, 3),
                                 run_convergence_study(cfg)});
    }
    return result;
}

TableResult graded_origin_table(bool quick) {
    TableResult result{"t3", "origin-graded vs uniform asset meshes, manufactured solution", {"c", "rmse"}, {}};
    ProblemSetup setup = manufactured_setup(0.9, 0.1, 0.1);
    const int m = quick ? 32 : 128;
    const int k = quick ? 128 : 1024;
    const std::vector<int> ns = quick ? std::vector<int>{8, 16, 32} : std::vector<int>{16, 32, 64, 128};
    const double T = setup.box.T;
    for (bool graded : {true, false}) {
        StudyConfig cfg;
        cfg.mode = StudyMode::ExactSolution;
        cfg.factory = graded ? RunFactory([setup](int n, int mm, int kk) {
            return prepare_run(setup, SinhOriginSpec{n, setup.box.X / 700.0}, UniformSpec{mm}, kk);
        })
                             : uniform_factory(setup);
        for (int n : ns) cfg.ladder.push_back({n, m, k});
        cfg.region = {0.0, 0.1 * setup.box.X, setup.box.zeta, setup.box.Y};
        cfg.exact = [T](double x, double y) { return manufactured_value(x, y, T); };
        result.blocks.push_back({graded ? "sinh-origin d=X/700" : "uniform", run_convergence_study(cfg)});
    }
    return result;
}

TableResult vanilla_reference_table(bool quick) {
    TableResult result{"t4", "vanilla call self-convergence against a fine reference", {"c", "rmse"}, {}};
    ProblemSetup setup = tp1_setup();
    StudyConfig cfg;
    cfg.mode = StudyMode::FineReference;
    cfg.factory = uniform_factory(setup);
    cfg.ladder = self_timed_ladder(quick ? std::vector<int>{8, 16, 32} : std::vector<int>{8, 16, 32, 64, 128, 256});
    cfg.reference = quick ? LadderEntry{64, 64, 128} : LadderEntry{512, 512, 1024};
    const double e = std::get<RampPayoff>(setup.payoff).strike;
    cfg.region = {0.9 * e, 1.1 * e, setup.box.zeta, setup.box.Y};
    result.blocks.push_back({"uniform NxNx2N", run_convergence_study(cfg)});
    return result;
}

TableResult strike_graded_table(bool quick) {
    TableResult result{"t5", "cash-or-nothing: strike-graded vs uniform asset meshes", {"c", "rmse"}, {}};
    ProblemSetup setup = tp2_setup();
    const double e = std::get<CashOrNothingPayoff>(setup.payoff).strike;
    for (bool graded : {true, false}) {
        StudyConfig cfg;
        cfg.mode = StudyMode::FineReference;
        cfg.factory = graded ? graded_x_factory(setup, false) : uniform_factory(setup);
        cfg.ladder = self_timed_ladder(quick ? std::vector<int>{8, 16, 32} : std::vector<int>{32, 64, 128, 256});
        cfg.reference = quick ? LadderEntry{64, 64, 128} : LadderEntry{512, 512, 1024};
        cfg.region = {0.9 * e, 1.1 * e, setup.box.zeta, setup.box.Y};
        result.blocks.push_back({graded ? "sinh-strike c=E/5" : "uniform", run_convergence_study(cfg)});
    }
    return result;
}

TableResult degenerate_floor_table(bool quick) {
    TableResult result{"t6", "vanilla call with zeta=0 (natural boundary at y=0)", {"c", "rmse"}, {}};
    ProblemSetup setup = tp1_setup();
    setup.box.zeta = 0.0;
    StudyConfig cfg;
    cfg.mode = StudyMode::FineReference;
    cfg.factory = uniform_factory(setup);
    cfg.ladder = self_timed_ladder(quick ? std::vector<int>{8, 16, 32} : std::vector<int>{8, 16, 32, 64, 128});
    cfg.reference = quick ? LadderEntry{64, 64, 128} : LadderEntry{256, 256, 512};
    const double e = std::get<RampPayoff>(setup.payoff).strike;
    cfg.region = {0.9 * e, 1.1 * e, 0.0, setup.box.Y};
    result.blocks.push_back({"uniform NxNx2N, zeta=0", run_convergence_study(cfg)});
    return result;
}

}  // namespace

TableResult run_table(const std::string& id, bool quick) {
    if (id == "t1") return spatial_table(quick);
    if (id == "t2") return temporal_table(quick);
    if (id == "t3") return graded_origin_table(quick);
    if (id == "t4") return vanilla_reference_table(quick);
    if (id == "t5") return strike_graded_table(quick);
    if (id == "t6") return degenerate_floor_table(quick);
    throw std::invalid_argument("unknown table id '" + id + "' (expected t1..t6)");
}

std::vector<std::string> table_ids() { return {"t1", "t2", "t3", "t4", "t5", "t6"}; }

}  // namespace hwlod

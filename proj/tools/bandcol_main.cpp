#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bandcol/bench.hpp"
#include "bandcol/coloring.hpp"
#include "bandcol/instance_io.hpp"
#include "bandcol/kernels.hpp"
#include "bandcol/oracle.hpp"
#include "bandcol/vns.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct InstanceFlags {
    std::string instance_path;
    bool bmcp = false;
    std::string weights_path;
    std::int32_t loop_default = 1;
};

struct SolverFlags {
    double time_limit = 60.0;
    std::uint64_t max_iters = 0;
    int k_min = 2;
    int k_max = 20;
    double p_move = 0.5;
    std::string criteria = "111";
    std::uint64_t seed = 1;
    std::string greedy_order = "id";
    bandcol::Color start_k = 0;
    bandcol::Color target_k = 0;
    std::string kernel = "auto";
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
    cmd->add_option("--instance", f.instance_path, "instance file")->required();
    cmd->add_flag("--bmcp", f.bmcp, "treat the instance as a multicoloring problem");
    cmd->add_option("--weights", f.weights_path, "vertex weights file (BMCP)");
    cmd->add_option("--loop-default", f.loop_default,
                    "d(v,v) for weighted vertices without a self-loop line");
}

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
    cmd->add_option("--time-limit", f.time_limit, "wall-clock budget in seconds");
    cmd->add_option("--max-iters", f.max_iters, "outer iteration cap (0 = none)");
    cmd->add_option("--kmin", f.k_min, "smallest shaking neighborhood");
    cmd->add_option("--kmax", f.k_max, "largest shaking neighborhood");
    cmd->add_option("--pmove", f.p_move, "acceptance probability on equal objectives");
    cmd->add_option("--criteria", f.criteria, "vertex ordering criteria mask, e.g. 101");
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--greedy-order", f.greedy_order, "greedy vertex order: id or weight")
        ->check(CLI::IsMember({"id", "weight"}));
    cmd->add_option("--start-k", f.start_k, "start from this color budget instead of UB-1");
    cmd->add_option("--target", f.target_k, "stop once a feasible span <= target is found");
    cmd->add_option("--kernel", f.kernel, "penalty kernel backend")
        ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));
}

std::array<bool, 3> parse_criteria(const std::string& mask) {
    if (mask.size() != 3 || mask.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("--criteria must be three binary digits, e.g. 111");
    return {mask[0] == '1', mask[1] == '1', mask[2] == '1'};
}

void apply_kernel_choice(const std::string& kernel) {
    using bandcol::kernels::Backend;
    if (kernel == "auto") return;
    Backend b = Backend::kScalar;
    if (kernel == "avx2") b = Backend::kAvx2;
    if (kernel == "neon") b = Backend::kNeon;
    if (!bandcol::kernels::set_backend(b))
        throw std::invalid_argument("kernel backend '" + kernel + "' is not available on this CPU");
}

bandcol::SolverConfig to_config(const SolverFlags& f) {
    bandcol::SolverConfig config;
    config.time_limit = f.time_limit;
    config.max_iters = f.max_iters;
    config.k_min = f.k_min;
    config.k_max = f.k_max;
    config.p_move = f.p_move;
    config.criteria = parse_criteria(f.criteria);
    config.seed = f.seed;
    config.greedy_order =
        f.greedy_order == "weight" ? bandcol::GreedyOrder::kWeightSumDesc : bandcol::GreedyOrder::kVertexId;
    config.start_k = f.start_k;
    config.target_k = f.target_k;
    config.validate();
    return config;
}

std::string instance_stem(const std::string& path) { return fs::path(path).stem().string(); }

// Loads either a plain instance or an expanded multicoloring instance.
struct LoadedInstance {
    std::string name;
    std::shared_ptr<const bandcol::WeightedGraph> graph;  // graph the solver runs on
    std::optional<bandcol::BmcpInstance> bmcp;
    std::optional<bandcol::ExpansionMap> map;
};

std::optional<std::string> sibling_weights_file(const std::string& instance_path) {
    fs::path p(instance_path);
    p.replace_extension(".w");
    if (fs::exists(p)) return p.string();
    return std::nullopt;
}

LoadedInstance load_instance(const InstanceFlags& flags, bool quiet = false) {
    LoadedInstance loaded;
    loaded.name = instance_stem(flags.instance_path);
    if (!flags.bmcp) {
        loaded.graph = std::make_shared<bandcol::WeightedGraph>(
            bandcol::parse_bcp_file(flags.instance_path));
        return loaded;
    }
    std::optional<std::string> weights;
    if (!flags.weights_path.empty())
        weights = flags.weights_path;
    else
        weights = sibling_weights_file(flags.instance_path);
    std::vector<std::string> warnings;
    loaded.bmcp =
        bandcol::parse_bmcp_file(flags.instance_path, weights, flags.loop_default, &warnings);
    if (!quiet)
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    auto [graph, map] = bandcol::expand_to_bcp(*loaded.bmcp);
    loaded.graph = std::make_shared<bandcol::WeightedGraph>(std::move(graph));
    loaded.map = std::move(map);
    return loaded;
}

void write_trace_json(const std::string& path, const std::string& name,
                      const bandcol::SolverConfig& config, const bandcol::RunResult& result) {
    json events = json::array();
    for (const auto& p : result.trace)
        events.push_back({{"t", p.seconds}, {"iteration", p.iteration}, {"k", p.k_star}});
    const json doc = {{"instance", name},
                      {"seed", config.seed},
                      {"k_star", result.k_star},
                      {"iterations", result.iterations},
                      {"events", events}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file '" + path + "'");
    out << doc.dump(2) << "\n";
}

int cmd_solve(const InstanceFlags& inst_flags, const SolverFlags& solver_flags,
              const std::string& out_path, const std::string& trace_path) {
    apply_kernel_choice(solver_flags.kernel);
    const LoadedInstance loaded = load_instance(inst_flags);
    bandcol::SolverConfig config = to_config(solver_flags);
    config.record_trace = !trace_path.empty();

    const bandcol::RunResult result = bandcol::solve(*loaded.graph, config);

    const std::string solution_path =
        out_path.empty() ? loaded.name + ".sol" : out_path;
    std::ofstream out(solution_path);
    if (!out) throw std::runtime_error("cannot write solution file '" + solution_path + "'");
    bandcol::write_solution(out, result.best_coloring);
    out.close();

    if (!trace_path.empty()) write_trace_json(trace_path, loaded.name, config, result);

    std::cout << loaded.name << ": k*=" << result.k_star << " time_to_best="
              << result.seconds_to_best << "s total=" << result.total_seconds
              << "s iterations=" << result.iterations << " seed=" << config.seed
              << " solution=" << solution_path << "\n";
    return kExitOk;
}

int cmd_verify(const InstanceFlags& inst_flags, const std::string& solution_path) {
    const LoadedInstance loaded = load_instance(inst_flags);
    std::ifstream in(solution_path);
    if (!in) throw bandcol::ParseError(0, "cannot open '" + solution_path + "'");
    const bandcol::Coloring coloring =
        bandcol::read_solution(in, loaded.graph->num_vertices());

    if (inst_flags.bmcp) {
        try {
            const bandcol::Multicoloring mc =
                bandcol::lift_solution(*loaded.bmcp, *loaded.map, coloring);
            std::cout << "feasible multicoloring, span " << mc.span() << "\n";
            return kExitOk;
        } catch (const std::invalid_argument& e) {
            std::cout << "infeasible: " << e.what() << "\n";
            return kExitInfeasible;
        }
    }
    if (auto violation = bandcol::check_bcp_solution(*loaded.graph, coloring)) {
        std::cout << "infeasible: " << *violation << "\n";
        return kExitInfeasible;
    }
    std::cout << "feasible, span " << bandcol::max_color(coloring) << "\n";
    return kExitOk;
}

struct BenchFlags {
    std::vector<std::string> instance_paths;
    bool bmcp = false;
    std::int32_t loop_default = 1;
    int runs = 30;
    int jobs = 1;
    bool stop_at_best = false;
    std::string best_known_path;
    std::string out_path;
    std::string log_path;
    bool no_stamp = false;
};

std::vector<bandcol::NamedInstance> load_bench_instances(const BenchFlags& flags) {
    std::vector<bandcol::NamedInstance> instances;
    for (const std::string& path : flags.instance_paths) {
        InstanceFlags one;
        one.instance_path = path;
        one.bmcp = flags.bmcp;
        one.loop_default = flags.loop_default;
        LoadedInstance loaded = load_instance(one);
        instances.push_back({loaded.name, loaded.graph});
    }
    return instances;
}

// Writes to the path, or to stdout under the given section comment.
void emit_csv(const std::string& path, const std::string& section,
              const std::function<void(std::ostream&)>& writer) {
    if (path.empty()) {
        if (!section.empty()) std::cout << "# " << section << "\n";
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    writer(out);
}

int cmd_bench(const BenchFlags& flags, const SolverFlags& solver_flags) {
    apply_kernel_choice(solver_flags.kernel);
    const auto instances = load_bench_instances(flags);

    std::map<std::string, bandcol::Color> best_known;
    if (!flags.best_known_path.empty()) {
        std::ifstream in(flags.best_known_path);
        if (!in) throw bandcol::ParseError(0, "cannot open '" + flags.best_known_path + "'");
        best_known = bandcol::read_best_known_csv(in);
    }

    bandcol::BenchOptions options;
    options.runs = flags.runs;
    options.base_seed = solver_flags.seed;
    options.jobs = flags.jobs;
    options.stop_at_best = flags.stop_at_best;
    options.solver = to_config(solver_flags);

    const bandcol::BenchReport report = bandcol::run_bench(instances, options, best_known);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";

    // Wall-clock columns are only meaningful (and only deterministic) when
    // the stop is time-based.
    const bool with_times = options.solver.max_iters == 0;
    const std::string stamp = flags.no_stamp ? "" : bandcol::csv_timestamp();
    emit_csv(flags.out_path, "report", [&](std::ostream& out) {
        bandcol::write_bench_csv(out, report, with_times, stamp);
    });
    std::string log_path = flags.log_path;
    if (log_path.empty() && !flags.out_path.empty()) log_path = flags.out_path + ".runs.csv";
    emit_csv(log_path, "per-run", [&](std::ostream& out) {
        bandcol::write_runs_csv(out, report.runs, with_times, stamp);
    });
    return kExitOk;
}

int cmd_ablate(const BenchFlags& flags, const SolverFlags& solver_flags) {
    apply_kernel_choice(solver_flags.kernel);
    const auto instances = load_bench_instances(flags);

    bandcol::BenchOptions options;
    options.runs = flags.runs;
    options.base_seed = solver_flags.seed;
    options.jobs = flags.jobs;
    options.solver = to_config(solver_flags);

    const bandcol::AblationReport report = bandcol::run_ablation(instances, options);
    const bool with_times = options.solver.max_iters == 0;
    const std::string stamp = flags.no_stamp ? "" : bandcol::csv_timestamp();
    emit_csv(flags.out_path, "report", [&](std::ostream& out) {
        bandcol::write_ablation_csv(out, report, stamp);
    });
    std::string log_path = flags.log_path;
    if (log_path.empty() && !flags.out_path.empty()) log_path = flags.out_path + ".runs.csv";
    emit_csv(log_path, "per-run", [&](std::ostream& out) {
        bandcol::write_runs_csv(out, report.runs, with_times, stamp);
    });
    return kExitOk;
}

int cmd_oracle(const InstanceFlags& inst_flags, bandcol::Color max_span, bandcol::Vertex limit) {
    const LoadedInstance loaded = load_instance(inst_flags);
    if (max_span <= 0) {
        const bandcol::Coloring greedy = bandcol::greedy_ub(*loaded.graph);
        max_span = bandcol::max_color(greedy);
    }
    const auto span = bandcol::exact_min_span(*loaded.graph, max_span, limit);
    if (span)
        std::cout << "minimum span = " << *span << "\n";
    else
        std::cout << "no coloring with span <= " << max_span << "\n";
    return kExitOk;
}

int cmd_kernels() {
    std::cout << "active: " << bandcol::kernels::active().name << "\n";
    std::cout << "available:";
    for (auto b : bandcol::kernels::available_backends())
        std::cout << " " << bandcol::kernels::backend_name(b);
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bandwidth (multi)coloring solver"};
    app.require_subcommand(1);

    InstanceFlags solve_inst, verify_inst, oracle_inst;
    SolverFlags solve_flags, bench_solver, ablate_solver;
    std::string solve_out, solve_trace, verify_solution;
    BenchFlags bench_flags, ablate_flags;
    bandcol::Color oracle_max_span = 0;
    bandcol::Vertex oracle_limit = 10;

    CLI::App* solve = app.add_subcommand("solve", "solve one instance");
    add_instance_flags(solve, solve_inst);
    add_solver_flags(solve, solve_flags);
    solve->add_option("--out", solve_out, "solution file path (default <instance>.sol)");
    solve->add_option("--trace", solve_trace, "write a JSON trace of improvement events");

    CLI::App* bench = app.add_subcommand("bench", "seeded multi-run benchmark");
    bench->add_option("--instances", bench_flags.instance_paths, "instance files")->required();
    bench->add_flag("--bmcp", bench_flags.bmcp, "instances are multicoloring problems");
    bench->add_option("--loop-default", bench_flags.loop_default,
                      "d(v,v) for weighted vertices without a self-loop line");
    bench->add_option("--runs", bench_flags.runs, "runs per instance");
    bench->add_option("--jobs", bench_flags.jobs, "worker threads");
    bench->add_option("--best-known", bench_flags.best_known_path, "reference CSV instance,best");
    bench->add_flag("--stop-at-best", bench_flags.stop_at_best,
                    "stop a run once it reaches the best-known span");
    bench->add_option("--out", bench_flags.out_path, "report CSV path (default stdout)");
    bench->add_option("--log", bench_flags.log_path, "per-run CSV path");
    bench->add_flag("--no-stamp", bench_flags.no_stamp, "omit the timestamp header");
    add_solver_flags(bench, bench_solver);

    CLI::App* ablate = app.add_subcommand("ablate", "all eight ordering-criteria variants");
    ablate->add_option("--instances", ablate_flags.instance_paths, "instance files")->required();
    ablate->add_flag("--bmcp", ablate_flags.bmcp, "instances are multicoloring problems");
    ablate->add_option("--loop-default", ablate_flags.loop_default,
                       "d(v,v) for weighted vertices without a self-loop line");
    ablate->add_option("--runs", ablate_flags.runs, "runs per instance and variant");
    ablate->add_option("--jobs", ablate_flags.jobs, "worker threads");
    ablate->add_option("--out", ablate_flags.out_path, "report CSV path (default stdout)");
    ablate->add_option("--log", ablate_flags.log_path, "per-run CSV path");
    ablate->add_flag("--no-stamp", ablate_flags.no_stamp, "omit the timestamp header");
    add_solver_flags(ablate, ablate_solver);

    CLI::App* verify = app.add_subcommand("verify", "check a solution file");
    add_instance_flags(verify, verify_inst);
    verify->add_option("--solution", verify_solution, "solution file")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exact minimum span of a small instance");
    add_instance_flags(oracle, oracle_inst);
    oracle->add_option("--max-span", oracle_max_span, "largest span to try (default greedy UB)");
    oracle->add_option("--limit", oracle_limit, "vertex count limit for the exhaustive search");

    CLI::App* kernels = app.add_subcommand("kernels", "list penalty kernel backends");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_inst, solve_flags, solve_out, solve_trace);
        if (bench->parsed()) return cmd_bench(bench_flags, bench_solver);
        if (ablate->parsed()) return cmd_ablate(ablate_flags, ablate_solver);
        if (verify->parsed()) return cmd_verify(verify_inst, verify_solution);
        if (oracle->parsed()) return cmd_oracle(oracle_inst, oracle_max_span, oracle_limit);
        if (kernels->parsed()) return cmd_kernels();
    } catch (const bandcol::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bandcol/graph.hpp"
#include "bandcol/vns.hpp"

namespace bandcol {

// Benchmark protocol: R independent seeded runs per instance (run i uses
// base_seed + i), aggregated into one report row per instance.  The
// per-run rows are kept so every aggregate can be recomputed from them.

struct NamedInstance {
    std::string name;
    std::shared_ptr<const WeightedGraph> graph;
};

// Reference best-known spans, keyed by instance name.  CSV rows of
// "instance,best"; a header row is skipped if present.
std::map<std::string, Color> read_best_known_csv(std::istream& in);

struct RunRecord {
    std::string instance;
    std::string variant;  // criteria mask for ablation rows, empty otherwise
    int run = 0;
    std::uint64_t seed = 0;
    Color k_star = 0;
    double seconds_to_best = 0.0;
    std::uint64_t iters_to_best = 0;
    std::uint64_t iterations = 0;
};

struct BenchLine {
    std::string instance;
    int runs = 0;
    Color best = 0;
    double avg = 0.0;
    double avg_seconds_all = 0.0;            // mean time-to-best over all runs
    std::optional<double> avg_seconds_hit;   // mean time-to-best over hit runs only
    double avg_iters_to_best = 0.0;
    std::optional<int> n_hit;                // runs with k* <= best known
    std::optional<Color> best_known;
};

struct AblationLine {
    std::string instance;
    std::string variant;  // "000".."111"
    int runs = 0;
    Color best = 0;
    double avg = 0.0;
};

struct BenchOptions {
    int runs = 30;
    std::uint64_t base_seed = 1;
    int jobs = 1;
    bool stop_at_best = false;  // pass the best-known span as the run target
    SolverConfig solver;
};

struct BenchReport {
    std::vector<BenchLine> lines;
    std::vector<RunRecord> runs;
    std::vector<std::string> warnings;
};

struct AblationReport {
    std::vector<AblationLine> lines;
    std::vector<RunRecord> runs;
};

BenchReport run_bench(const std::vector<NamedInstance>& instances, const BenchOptions& options,
                      const std::map<std::string, Color>& best_known);

// Runs all eight on/off combinations of the three ordering criteria with
// otherwise identical budgets; criteria of BenchOptions::solver are ignored.
AblationReport run_ablation(const std::vector<NamedInstance>& instances,
                            const BenchOptions& options);

// CSV emission.  A "# ..." timestamp header is written when stamp is set;
// with_times drops the wall-clock columns so iteration-capped runs emit
// byte-identical bodies.
void write_bench_csv(std::ostream& out, const BenchReport& report, bool with_times,
                     const std::string& stamp);
void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, bool with_times,
                    const std::string& stamp);
void write_ablation_csv(std::ostream& out, const AblationReport& report, const std::string& stamp);

std::string csv_timestamp();

}  // namespace bandcol

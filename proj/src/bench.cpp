#include "bandcol/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

namespace bandcol {

namespace {

std::string format_double(double value, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, value);
    return buf;
}

std::string avg_str(double v) { return format_double(v, "%.10g"); }
std::string seconds_str(double v) { return format_double(v, "%.6f"); }

struct Task {
    std::size_t instance_idx;
    std::string variant;  // empty for plain bench
    std::array<bool, 3> criteria;
    int run;
    std::uint64_t seed;
    Color target;
};

std::vector<RunRecord> execute(const std::vector<NamedInstance>& instances,
                               const std::vector<Task>& tasks, const BenchOptions& options) {
    std::vector<RunRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            SolverConfig config = options.solver;
            config.seed = task.seed;
            config.criteria = task.criteria;
            if (task.target > 0) config.target_k = task.target;
            const RunResult result = solve(*instances[task.instance_idx].graph, config);
            records[i] = {instances[task.instance_idx].name,
                          task.variant,
                          task.run,
                          task.seed,
                          result.k_star,
                          result.seconds_to_best,
                          result.iters_to_best,
                          result.iterations};
        }
    };

    const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return records;
}

}  // namespace

std::map<std::string, Color> read_best_known_csv(std::istream& in) {
    std::map<std::string, Color> table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string name, value;
        if (!std::getline(ss, name, ',') || !std::getline(ss, value, ','))
            throw ParseError(line_no, "best-known rows must read 'instance,best'");
        if (line_no == 1 && name == "instance") continue;  // header row
        try {
            table[name] = static_cast<Color>(std::stol(value));
        } catch (const std::exception&) {
            throw ParseError(line_no, "best-known value is not an integer: '" + value + "'");
        }
    }
    return table;
}

namespace {

void validate_protocol(const std::vector<NamedInstance>& instances, const BenchOptions& options) {
    if (options.runs < 1) throw std::invalid_argument("runs must be >= 1");
    options.solver.validate();
    std::set<std::string> names;
    for (const NamedInstance& inst : instances)
        if (!names.insert(inst.name).second)
            throw std::invalid_argument("duplicate instance name '" + inst.name + "'");
}

}  // namespace

BenchReport run_bench(const std::vector<NamedInstance>& instances, const BenchOptions& options,
                      const std::map<std::string, Color>& best_known) {
    validate_protocol(instances, options);
    BenchReport report;
    std::vector<Task> tasks;
    tasks.reserve(instances.size() * options.runs);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto it = best_known.find(instances[i].name);
        if (it == best_known.end() && !best_known.empty())
            report.warnings.push_back("no best-known entry for " + instances[i].name);
        const Color target =
            options.stop_at_best && it != best_known.end() ? it->second : 0;
        for (int r = 0; r < options.runs; ++r)
            tasks.push_back({i, "", options.solver.criteria, r,
                             options.base_seed + static_cast<std::uint64_t>(r), target});
    }

    report.runs = execute(instances, tasks, options);
    std::sort(report.runs.begin(), report.runs.end(), [](const RunRecord& a, const RunRecord& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.run < b.run;
    });

    for (const NamedInstance& inst : instances) {
        BenchLine line;
        line.instance = inst.name;
        const auto it = best_known.find(inst.name);
        if (it != best_known.end()) line.best_known = it->second;

        Color best = 0;
        double sum_k = 0, sum_t = 0, sum_iters = 0, sum_t_hit = 0;
        int hits = 0;
        for (const RunRecord& r : report.runs) {
            if (r.instance != inst.name) continue;
            ++line.runs;
            best = best == 0 ? r.k_star : std::min(best, r.k_star);
            sum_k += r.k_star;
            sum_t += r.seconds_to_best;
            sum_iters += static_cast<double>(r.iters_to_best);
            if (line.best_known && r.k_star <= *line.best_known) {
                ++hits;
                sum_t_hit += r.seconds_to_best;
            }
        }
        line.best = best;
        line.avg = sum_k / line.runs;
        line.avg_seconds_all = sum_t / line.runs;
        line.avg_iters_to_best = sum_iters / line.runs;
        if (line.best_known) {
            line.n_hit = hits;
            if (hits > 0) line.avg_seconds_hit = sum_t_hit / hits;
        }
        report.lines.push_back(std::move(line));
    }
    std::sort(report.lines.begin(), report.lines.end(),
              [](const BenchLine& a, const BenchLine& b) { return a.instance < b.instance; });
    return report;
}

AblationReport run_ablation(const std::vector<NamedInstance>& instances,
                            const BenchOptions& options) {
    validate_protocol(instances, options);
    AblationReport report;
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (int mask = 0; mask < 8; ++mask) {
            const std::string variant = {static_cast<char>('0' + ((mask >> 2) & 1)),
                                         static_cast<char>('0' + ((mask >> 1) & 1)),
                                         static_cast<char>('0' + (mask & 1))};
            const std::array<bool, 3> criteria{(mask & 4) != 0, (mask & 2) != 0, (mask & 1) != 0};
            for (int r = 0; r < options.runs; ++r)
                tasks.push_back({i, variant, criteria, r,
                                 options.base_seed + static_cast<std::uint64_t>(r), 0});
        }
    }

    report.runs = execute(instances, tasks, options);
    std::sort(report.runs.begin(), report.runs.end(), [](const RunRecord& a, const RunRecord& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        if (a.variant != b.variant) return a.variant < b.variant;
        return a.run < b.run;
    });

    for (const NamedInstance& inst : instances) {
        for (int mask = 0; mask < 8; ++mask) {
            const std::string variant = {static_cast<char>('0' + ((mask >> 2) & 1)),
                                         static_cast<char>('0' + ((mask >> 1) & 1)),
                                         static_cast<char>('0' + (mask & 1))};
            AblationLine line;
            line.instance = inst.name;
            line.variant = variant;
            Color best = 0;
            double sum = 0;
            for (const RunRecord& r : report.runs) {
                if (r.instance != inst.name || r.variant != variant) continue;
                ++line.runs;
                best = best == 0 ? r.k_star : std::min(best, r.k_star);
                sum += r.k_star;
            }
            line.best = best;
            line.avg = sum / line.runs;
            report.lines.push_back(std::move(line));
        }
    }
    return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report, bool with_times,
                     const std::string& stamp) {
    if (!stamp.empty()) out << "# " << stamp << "\n";
    out << "instance,runs,best,avg,avg_time_to_best_s,avg_time_to_best_hit_s,avg_iters_to_best,"
           "n_hit,best_known,diff\n";
    for (const BenchLine& l : report.lines) {
        out << l.instance << ',' << l.runs << ',' << l.best << ',' << avg_str(l.avg) << ',';
        if (with_times) out << seconds_str(l.avg_seconds_all);
        out << ',';
        if (with_times && l.avg_seconds_hit) out << seconds_str(*l.avg_seconds_hit);
        out << ',' << avg_str(l.avg_iters_to_best) << ',';
        if (l.n_hit) out << *l.n_hit << '/' << l.runs;
        out << ',';
        if (l.best_known) out << *l.best_known;
        out << ',';
        if (l.best_known) out << l.best - *l.best_known;
        out << '\n';
    }
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& runs, bool with_times,
                    const std::string& stamp) {
    if (!stamp.empty()) out << "# " << stamp << "\n";
    out << "instance,variant,run,seed,k_star,time_to_best_s,iters_to_best,iterations\n";
    for (const RunRecord& r : runs) {
        out << r.instance << ',' << r.variant << ',' << r.run << ',' << r.seed << ',' << r.k_star
            << ',';
        if (with_times) out << seconds_str(r.seconds_to_best);
        out << ',' << r.iters_to_best << ',' << r.iterations << '\n';
    }
}

void write_ablation_csv(std::ostream& out, const AblationReport& report,
                        const std::string& stamp) {
    if (!stamp.empty()) out << "# " << stamp << "\n";
    out << "instance,variant,runs,best,avg\n";
    for (const AblationLine& l : report.lines)
        out << l.instance << ',' << l.variant << ',' << l.runs << ',' << l.best << ','
            << avg_str(l.avg) << '\n';
}

std::string csv_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string("generated ") + buf;
}

}  // namespace bandcol

#include "archtrunc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "archtrunc/csv.hpp"
#include "archtrunc/indicators.hpp"
#include "archtrunc/random.hpp"

namespace archtrunc {

namespace fs = std::filesystem;
using nlohmann::json;

// ---------------------------------------------------------------- config

void ExperimentConfig::validate() const
{
    auto const fail = [](std::string const& msg) { throw ContractViolation("invalid config: " + msg); };
    if (fronts.empty()) {
        fail("'fronts' must not be empty");
    }
    if (policies.empty()) {
        fail("'policies' must not be empty");
    }
    if (schedules.empty()) {
        fail("'schedules' must not be empty");
    }
    if (objectives < 2) {
        fail("'objectives' must be at least 2");
    }
    if (mu == 0 || mu >= n_solutions) {
        fail("'mu' must satisfy 0 < mu < n_solutions");
    }
    if (n_shuffles == 0) {
        fail("'n_shuffles' must be at least 1");
    }
    if (workers == 0) {
        fail("'workers' must be at least 1");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        fail("'alpha' must lie in (0, 1)");
    }
    if (!(kappa > 0.0)) {
        fail("'kappa' must be positive");
    }
    if (!(theta >= 0.0)) {
        fail("'theta' must be non-negative");
    }
    if (!(hv_ref_factor > 1.0)) {
        fail("'hv_ref_factor' must exceed 1");
    }
    if (ideal_mode != "fixed" && ideal_mode != "running-min") {
        fail("'ideal_mode' must be \"fixed\" or \"running-min\"");
    }
    if (igd_divisions == 0) {
        fail("'igd_divisions' must be positive");
    }
    bool const hv_policy = std::any_of(policies.begin(), policies.end(),
                                       [](auto p) { return p == PolicyId::SmsRemoval || p == PolicyId::HvInclusion; });
    if (hv_policy && objectives > 3) {
        fail("hypervolume policies support at most 3 objectives");
    }
    bool const weighted = std::any_of(policies.begin(), policies.end(), [](auto p) { return uses_weights(p); });
    if (weighted && weight_divisions == 0) {
        (void)divisions_for(mu, objectives);
    }
}

namespace {

template <typename T>
T get_as(json const& value, std::string const& key)
{
    try {
        return value.get<T>();
    } catch (json::exception const&) {
        throw ContractViolation("config key '" + key + "': wrong type");
    }
}

} // namespace

ExperimentConfig parse_config(std::string const& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (json::parse_error const& e) {
        throw ContractViolation(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ContractViolation("config must be a JSON object");
    }

    ExperimentConfig cfg;
    for (auto const& [key, value] : doc.items()) {
        auto const names = [&] {
            auto list = get_as<std::vector<std::string>>(value, key);
            if (list.empty()) {
                throw ContractViolation("config key '" + key + "': list must not be empty");
            }
            return list;
        };
        try {
            if (key == "fronts") {
                cfg.fronts.clear();
                for (auto const& n : names()) {
                    cfg.fronts.push_back(parse_front_kind(n));
                }
            } else if (key == "policies") {
                cfg.policies.clear();
                for (auto const& n : names()) {
                    cfg.policies.push_back(parse_policy(n));
                }
            } else if (key == "schedules") {
                cfg.schedules.clear();
                for (auto const& n : names()) {
                    cfg.schedules.push_back(parse_schedule(n));
                }
            } else if (key == "objectives") {
                cfg.objectives = get_as<std::size_t>(value, key);
            } else if (key == "n_solutions") {
                cfg.n_solutions = get_as<std::size_t>(value, key);
            } else if (key == "mu") {
                cfg.mu = get_as<std::size_t>(value, key);
            } else if (key == "n_shuffles") {
                cfg.n_shuffles = get_as<std::size_t>(value, key);
            } else if (key == "base_seed") {
                cfg.base_seed = get_as<std::uint64_t>(value, key);
            } else if (key == "theta") {
                cfg.theta = get_as<double>(value, key);
            } else if (key == "kappa") {
                cfg.kappa = get_as<double>(value, key);
            } else if (key == "hv_ref_factor") {
                cfg.hv_ref_factor = get_as<double>(value, key);
            } else if (key == "ideal_mode") {
                cfg.ideal_mode = get_as<std::string>(value, key);
            } else if (key == "weight_divisions") {
                cfg.weight_divisions = get_as<std::size_t>(value, key);
            } else if (key == "igd_divisions") {
                cfg.igd_divisions = get_as<std::size_t>(value, key);
            } else if (key == "alpha") {
                cfg.alpha = get_as<double>(value, key);
            } else if (key == "output_dir") {
                cfg.output_dir = get_as<std::string>(value, key);
            } else if (key == "workers") {
                cfg.workers = get_as<std::size_t>(value, key);
            } else if (key == "record_diagnostics") {
                cfg.record_diagnostics = get_as<bool>(value, key);
            } else {
                throw ContractViolation("unknown config key '" + key + "'");
            }
        } catch (ContractViolation const& e) {
            std::string const what = e.what();
            if (what.find("config key") != std::string::npos) {
                throw;
            }
            throw ContractViolation("config key '" + key + "': " + what);
        }
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(fs::path const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string config_to_json(ExperimentConfig const& cfg)
{
    json doc;
    auto& fronts = doc["fronts"] = json::array();
    for (auto f : cfg.fronts) {
        fronts.push_back(std::string(to_string(f)));
    }
    auto& policies = doc["policies"] = json::array();
    for (auto p : cfg.policies) {
        policies.push_back(std::string(to_string(p)));
    }
    auto& schedules = doc["schedules"] = json::array();
    for (auto s : cfg.schedules) {
        schedules.push_back(std::string(to_string(s)));
    }
    doc["objectives"] = cfg.objectives;
    doc["n_solutions"] = cfg.n_solutions;
    doc["mu"] = cfg.mu;
    doc["n_shuffles"] = cfg.n_shuffles;
    doc["base_seed"] = cfg.base_seed;
    doc["theta"] = cfg.theta;
    doc["kappa"] = cfg.kappa;
    doc["hv_ref_factor"] = cfg.hv_ref_factor;
    doc["ideal_mode"] = cfg.ideal_mode;
    doc["weight_divisions"] = cfg.weight_divisions;
    doc["igd_divisions"] = cfg.igd_divisions;
    doc["alpha"] = cfg.alpha;
    doc["output_dir"] = cfg.output_dir.string();
    doc["workers"] = cfg.workers;
    doc["record_diagnostics"] = cfg.record_diagnostics;
    return doc.dump(2);
}

std::size_t divisions_for(std::size_t mu, std::size_t m)
{
    auto const count = [m](std::size_t h) {
        // C(h + m - 1, m - 1)
        double c = 1.0;
        for (std::size_t i = 1; i < m; ++i) {
            c = c * static_cast<double>(h + i) / static_cast<double>(i);
        }
        return static_cast<std::size_t>(c + 0.5);
    };
    for (std::size_t h = 1; count(h) <= mu; ++h) {
        if (count(h) == mu) {
            return h;
        }
    }
    throw ContractViolation("mu = " + std::to_string(mu) + " is not a Das-Dennis lattice size for " + std::to_string(m) +
                            " objectives; set weight_divisions explicitly");
}

PolicyContext make_policy_context(ExperimentConfig const& cfg)
{
    PolicyContext ctx;
    bool const weighted = std::any_of(cfg.policies.begin(), cfg.policies.end(), [](auto p) { return uses_weights(p); });
    if (weighted) {
        auto const h = cfg.weight_divisions != 0 ? cfg.weight_divisions : divisions_for(cfg.mu, cfg.objectives);
        ctx.weights = das_dennis(cfg.objectives, h);
        if (ctx.weights.vectors.size() != cfg.mu) {
            throw ContractViolation("weight_divisions = " + std::to_string(h) + " gives " + std::to_string(ctx.weights.vectors.size()) +
                                    " vectors, mu is " + std::to_string(cfg.mu));
        }
    }
    ctx.theta = cfg.theta;
    ctx.kappa = cfg.kappa;
    ctx.hv_ref.factor = cfg.hv_ref_factor;
    if (cfg.ideal_mode == "fixed") {
        ctx.fixed_ideal = ObjectiveVector(std::vector<double>(cfg.objectives, 0.0));
    }
    return ctx;
}

// ---------------------------------------------------------------- grid

std::size_t select_median_run(std::span<double const> igds)
{
    if (igds.empty()) {
        throw ContractViolation("cannot select a median run from an empty cell");
    }
    std::vector<double> sorted(igds.begin(), igds.end());
    std::sort(sorted.begin(), sorted.end());
    double const median = sorted[(sorted.size() - 1) / 2];
    return static_cast<std::size_t>(std::find(igds.begin(), igds.end(), median) - igds.begin());
}

std::string cell_file_stem(FrontKind front, PolicyId policy, Schedule schedule)
{
    return std::string(to_string(front)) + "_" + std::string(to_string(policy)) + "_" + std::string(to_string(schedule));
}

namespace {

struct Task {
    std::size_t front_index;
    PolicyId policy;
    Schedule schedule;
    std::size_t shuffle;
};

struct TaskOutcome {
    std::optional<ResultRecord> record;
    std::optional<FailedRun> failure;
    std::vector<EventDiagnostics> events;
};

std::uint64_t run_seed(ExperimentConfig const& cfg, Task const& t)
{
    auto const cell = static_cast<std::uint64_t>(t.front_index) * 64 + static_cast<std::uint64_t>(t.policy) * 4 +
                      static_cast<std::uint64_t>(t.schedule);
    return mix_seed(cfg.base_seed + t.shuffle, cell);
}

template <typename Writer>
void write_file(fs::path const& path, Writer&& writer)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    writer(out);
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::vector<ObjectiveVector> front_vertices(FrontKind front, std::size_t m)
{
    std::vector<ObjectiveVector> out;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> v(m, front == FrontKind::Simplex ? 0.0 : 1.0);
        v[i] = front == FrontKind::Simplex ? 1.0 : 0.0;
        out.emplace_back(std::move(v));
    }
    return out;
}

void write_trace(fs::path const& path, std::span<EventDiagnostics const> events)
{
    write_file(path, [&](std::ostream& out) {
        out << "batch,size_before,size_after,nadir_fallback,ideal,nadir\n";
        auto const vec = [](std::optional<ObjectiveVector> const& v) {
            std::string s;
            if (v) {
                for (std::size_t k = 0; k < v->size(); ++k) {
                    s += (k ? ";" : "") + format_exact((*v)[k]);
                }
            }
            return s;
        };
        for (auto const& e : events) {
            out << e.batch_index << ',' << e.size_before << ',' << e.size_after << ',' << (e.nadir_fallback ? 1 : 0) << ','
                << vec(e.ideal) << ',' << vec(e.nadir) << '\n';
        }
    });
}

} // namespace

ExperimentResult run_experiment(ExperimentConfig const& cfg)
{
    cfg.validate();
    auto const started = std::chrono::steady_clock::now();

    ExperimentResult result;
    result.directory = cfg.output_dir;
    fs::create_directories(cfg.output_dir / "plotdata");
    fs::create_directories(cfg.output_dir / "archives");
    if (cfg.record_diagnostics) {
        fs::create_directories(cfg.output_dir / "traces");
    }
    write_file(cfg.output_dir / "config.json", [&](std::ostream& out) { out << config_to_json(cfg) << '\n'; });

    auto const ctx = make_policy_context(cfg);
    std::vector<std::vector<ObjectiveVector>> bases;
    std::vector<IgdReferenceSet> refsets;
    for (auto front : cfg.fronts) {
        bases.push_back(sample_front(front, cfg.n_solutions, cfg.base_seed, cfg.objectives));
        refsets.emplace_back(igd_reference_points(front, cfg.objectives, cfg.igd_divisions));
        write_file(cfg.output_dir / ("reference_" + std::string(to_string(front)) + ".csv"),
                   [&](std::ostream& out) { write_points_csv(out, refsets.back().points()); });
    }

    std::vector<Task> tasks;
    for (std::size_t f = 0; f < cfg.fronts.size(); ++f) {
        for (auto policy : cfg.policies) {
            for (auto schedule : cfg.schedules) {
                for (std::size_t k = 0; k < cfg.n_shuffles; ++k) {
                    tasks.push_back({f, policy, schedule, k});
                }
            }
        }
    }

    std::vector<TaskOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto const worker = [&] {
        for (auto i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            auto const& task = tasks[i];
            auto const front = cfg.fronts[task.front_index];
            auto& outcome = outcomes[i];
            try {
                auto const t0 = std::chrono::steady_clock::now();
                auto const seq = build_sequence(front, bases[task.front_index], cfg.base_seed, cfg.base_seed + task.shuffle,
                                                batch_size_for(task.schedule, cfg.mu));
                RunOptions options{cfg.record_diagnostics, run_seed(cfg, task)};
                auto trace = run_archiving(seq, task.policy, task.schedule, cfg.mu, ctx, options);
                auto const objs = objectives_of(trace.final_archive.members);
                double const value = igd(objs, refsets[task.front_index]);
                auto const t1 = std::chrono::steady_clock::now();
                outcome.record = ResultRecord{front,
                                              task.policy,
                                              task.schedule,
                                              task.shuffle,
                                              value,
                                              std::chrono::duration<double, std::milli>(t1 - t0).count(),
                                              std::move(trace.final_archive.members)};
                outcome.events = std::move(trace.events);
            } catch (std::exception const& e) {
                outcome.failure = FailedRun{front, task.policy, task.schedule, task.shuffle, e.what()};
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        auto const n_workers = std::min(cfg.workers, tasks.size());
        for (std::size_t w = 1; w < n_workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        auto& o = outcomes[i];
        if (o.record) {
            if (cfg.record_diagnostics) {
                auto const& t = tasks[i];
                write_trace(cfg.output_dir / "traces" /
                                (cell_file_stem(cfg.fronts[t.front_index], t.policy, t.schedule) + "_s" + std::to_string(t.shuffle) + ".csv"),
                            o.events);
            }
            result.records.push_back(std::move(*o.record));
        } else if (o.failure) {
            result.failures.push_back(std::move(*o.failure));
        }
    }

    write_file(cfg.output_dir / "raw_results.csv", [&](std::ostream& out) { write_raw_results(out, result.records); });
    if (!result.failures.empty()) {
        write_file(cfg.output_dir / "failed_runs.csv", [&](std::ostream& out) {
            out << "front,policy,schedule,shuffle,error\n";
            for (auto const& f : result.failures) {
                std::string msg = f.error;
                std::replace(msg.begin(), msg.end(), ',', ';');
                std::replace(msg.begin(), msg.end(), '\n', ' ');
                out << to_string(f.front) << ',' << to_string(f.policy) << ',' << to_string(f.schedule) << ',' << f.shuffle << ',' << msg
                    << '\n';
            }
        });
    }

    result.summary = summarize_records(result.records, cfg.alpha);
    write_file(cfg.output_dir / "summary.csv", [&](std::ostream& out) { write_summary_csv(out, result.summary); });
    write_file(cfg.output_dir / "summary.txt", [&](std::ostream& out) { write_summary_table(out, result.summary); });

    // median-run archives and plot data per cell
    std::map<std::string, std::vector<ResultRecord const*>> cells;
    for (auto const& r : result.records) {
        cells[cell_file_stem(r.front, r.policy, r.schedule)].push_back(&r);
    }
    for (auto const& [stem, members] : cells) {
        std::vector<double> igds;
        for (auto const* r : members) {
            igds.push_back(r->igd);
        }
        auto const* median = members[select_median_run(igds)];
        std::vector<std::vector<Solution>> one_batch{median->final_archive};
        write_sequence_csv(cfg.output_dir / "archives" / (stem + ".csv"), one_batch);
        export_plot_data(cfg.output_dir / "plotdata" / (stem + ".csv"), median->front, median->final_archive, median->igd);
    }

    result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

// ---------------------------------------------------------------- persistence

std::vector<SummaryCell> summarize_records(std::span<ResultRecord const> records, double alpha)
{
    // (front, policy) -> schedule -> igd by shuffle
    std::map<std::pair<FrontKind, PolicyId>, std::map<Schedule, std::vector<std::pair<std::size_t, double>>>> grouped;
    for (auto const& r : records) {
        grouped[{r.front, r.policy}][r.schedule].emplace_back(r.shuffle, r.igd);
    }
    std::vector<SummaryCell> cells;
    for (auto& [key, by_schedule] : grouped) {
        std::vector<SampleGroup> groups;
        std::vector<Schedule> order;
        for (auto& [schedule, values] : by_schedule) {
            std::sort(values.begin(), values.end());
            SampleGroup g{std::string(to_string(schedule)), {}};
            for (auto const& v : values) {
                g.values.push_back(v.second);
            }
            groups.push_back(std::move(g));
            order.push_back(schedule);
        }
        if (groups.size() == 1) {
            cells.push_back({key.first, key.second, order.front(), groups.front().values.size(), sample_mean(groups.front().values),
                             sample_std(groups.front().values), "a"});
            continue;
        }
        auto const rows = summarize(groups, alpha);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            cells.push_back({key.first, key.second, order[i], groups[i].values.size(), rows[i].mean, rows[i].std_dev, rows[i].letters});
        }
    }
    return cells;
}

void write_raw_results(std::ostream& out, std::span<ResultRecord const> records)
{
    out << "front,policy,schedule,shuffle,igd,duration_ms\n";
    char duration[32];
    for (auto const& r : records) {
        std::snprintf(duration, sizeof duration, "%.3f", r.duration_ms);
        out << to_string(r.front) << ',' << to_string(r.policy) << ',' << to_string(r.schedule) << ',' << r.shuffle << ','
            << format_exact(r.igd) << ',' << duration << '\n';
    }
}

std::vector<ResultRecord> read_raw_results(std::istream& in)
{
    csv::Reader reader(in);
    auto const c_front = reader.column("front");
    auto const c_policy = reader.column("policy");
    auto const c_schedule = reader.column("schedule");
    auto const c_shuffle = reader.column("shuffle");
    auto const c_igd = reader.column("igd");
    auto const c_duration = reader.column("duration_ms");
    std::vector<ResultRecord> out;
    std::vector<std::string_view> row;
    while (reader.next(row)) {
        if (row.size() != reader.header().size()) {
            throw ContractViolation("raw results line " + std::to_string(reader.line()) + ": wrong field count");
        }
        ResultRecord r;
        r.front = parse_front_kind(row[c_front]);
        r.policy = parse_policy(row[c_policy]);
        r.schedule = parse_schedule(row[c_schedule]);
        r.shuffle = csv::parse_unsigned(row[c_shuffle]);
        r.igd = csv::parse_double(row[c_igd]);
        r.duration_ms = csv::parse_double(row[c_duration]);
        out.push_back(std::move(r));
    }
    return out;
}

void write_summary_csv(std::ostream& out, std::span<SummaryCell const> cells)
{
    out << "front,policy,schedule,runs,mean,std,letters\n";
    for (auto const& c : cells) {
        out << to_string(c.front) << ',' << to_string(c.policy) << ',' << to_string(c.schedule) << ',' << c.runs << ','
            << format_exact(c.mean) << ',' << format_exact(c.std_dev) << ',' << c.letters << '\n';
    }
}

void write_summary_table(std::ostream& out, std::span<SummaryCell const> cells)
{
    std::vector<PolicyId> policies;
    std::vector<FrontKind> fronts;
    std::vector<Schedule> schedules;
    for (auto const& c : cells) {
        if (std::find(policies.begin(), policies.end(), c.policy) == policies.end()) {
            policies.push_back(c.policy);
        }
        if (std::find(fronts.begin(), fronts.end(), c.front) == fronts.end()) {
            fronts.push_back(c.front);
        }
        if (std::find(schedules.begin(), schedules.end(), c.schedule) == schedules.end()) {
            schedules.push_back(c.schedule);
        }
    }
    std::sort(schedules.begin(), schedules.end());

    constexpr int kLabel = 10;
    constexpr int kCell = 28;
    out << std::left << std::setw(kLabel) << "sequence" << std::setw(kLabel + 1) << "approach";
    for (auto p : policies) {
        out << std::setw(kCell) << to_string(p);
    }
    out << '\n';
    for (auto f : fronts) {
        for (auto s : schedules) {
            out << std::setw(kLabel) << to_string(f) << std::setw(kLabel + 1) << to_string(s);
            for (auto p : policies) {
                auto it = std::find_if(cells.begin(), cells.end(),
                                       [&](auto const& c) { return c.front == f && c.policy == p && c.schedule == s; });
                std::string text = "-";
                if (it != cells.end()) {
                    text = format_scientific(it->mean, 4) + " +- " + format_scientific(it->std_dev, 2) + " (" + it->letters + ")";
                }
                out << std::setw(kCell) << text;
            }
            out << '\n';
        }
    }
}

void export_plot_data(fs::path const& file, FrontKind front, std::span<Solution const> archive, double igd_value)
{
    if (archive.empty()) {
        throw ContractViolation("refusing to export plot data for an empty archive: " + file.string());
    }
    auto const m = archive.front().objectives.size();
    write_file(file, [&](std::ostream& out) {
        out << "kind";
        for (std::size_t k = 1; k <= m; ++k) {
            out << ",f" << k;
        }
        out << ",igd\n";
        for (auto const& s : archive) {
            out << "archive";
            for (double v : s.objectives) {
                out << ',' << format_exact(v);
            }
            out << ',' << format_exact(igd_value) << '\n';
        }
        for (auto const& v : front_vertices(front, m)) {
            out << "vertex";
            for (double x : v) {
                out << ',' << format_exact(x);
            }
            out << ",\n";
        }
    });
}

std::vector<SummaryCell> rebuild_summary(fs::path const& results_dir, double alpha)
{
    std::ifstream in(results_dir / "raw_results.csv");
    if (!in) {
        throw std::runtime_error("cannot read " + (results_dir / "raw_results.csv").string());
    }
    auto const records = read_raw_results(in);
    auto cells = summarize_records(records, alpha);
    write_file(results_dir / "summary.csv", [&](std::ostream& out) { write_summary_csv(out, cells); });
    write_file(results_dir / "summary.txt", [&](std::ostream& out) { write_summary_table(out, cells); });
    return cells;
}

std::size_t rebuild_plot_data(fs::path const& results_dir)
{
    std::ifstream in(results_dir / "raw_results.csv");
    if (!in) {
        throw std::runtime_error("cannot read " + (results_dir / "raw_results.csv").string());
    }
    auto const records = read_raw_results(in);
    std::map<std::string, std::vector<ResultRecord const*>> cells;
    for (auto const& r : records) {
        cells[cell_file_stem(r.front, r.policy, r.schedule)].push_back(&r);
    }
    fs::create_directories(results_dir / "plotdata");
    std::size_t written = 0;
    for (auto& [stem, members] : cells) {
        std::sort(members.begin(), members.end(), [](auto* a, auto* b) { return a->shuffle < b->shuffle; });
        std::vector<double> igds;
        for (auto const* r : members) {
            igds.push_back(r->igd);
        }
        auto const* median = members[select_median_run(igds)];
        auto const batches = read_sequence_csv(results_dir / "archives" / (stem + ".csv"));
        std::vector<Solution> archive;
        for (auto const& b : batches) {
            archive.insert(archive.end(), b.begin(), b.end());
        }
        export_plot_data(results_dir / "plotdata" / (stem + ".csv"), median->front, archive, median->igd);
        ++written;
    }
    return written;
}

} // namespace archtrunc

// archtrunc command-line entry point.
//
// Exit codes: 0 success, 1 usage error, 2 runtime failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "archtrunc/experiment.hpp"
#include "archtrunc/refsets.hpp"
#include "archtrunc/selftest.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kRuntime = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_generate(std::string const& front_name, std::size_t n, std::uint64_t seed, std::optional<std::uint64_t> shuffle_seed,
                 std::optional<std::size_t> batch_size, std::string const& out, bool reference)
{
    using namespace archtrunc;
    FrontKind front{};
    try {
        front = parse_front_kind(front_name);
    } catch (ContractViolation const& e) {
        throw UsageError(e.what());
    }
    if (reference) {
        std::ofstream file(out);
        if (!file) {
            throw std::runtime_error("cannot write " + out);
        }
        write_points_csv(file, igd_reference_points(front));
        return 0;
    }
    if (n == 0) {
        throw UsageError("--n must be positive");
    }
    if (batch_size && *batch_size == 0) {
        throw UsageError("--batch-size must be positive");
    }
    auto const seq = build_sequence(front, n, seed, shuffle_seed.value_or(seed), batch_size);
    write_sequence_csv(std::filesystem::path(out), seq.batches);
    return 0;
}

int cmd_run(std::string const& config_path, std::optional<std::size_t> workers, std::optional<std::string> const& out)
{
    using namespace archtrunc;
    ExperimentConfig cfg;
    try {
        cfg = load_config(config_path);
        if (workers) {
            cfg.workers = *workers;
        }
        if (out) {
            cfg.output_dir = *out;
        }
        cfg.validate();
    } catch (ContractViolation const& e) {
        throw UsageError(e.what());
    }
    auto const result = run_experiment(cfg);
    write_summary_table(std::cout, result.summary);
    std::fprintf(stderr, "%zu runs, %zu failed, %.1f s -> %s\n", result.records.size(), result.failures.size(), result.wall_seconds,
                 result.directory.string().c_str());
    for (auto const& f : result.failures) {
        std::fprintf(stderr, "failed: %s %s %s shuffle %zu: %s\n", std::string(to_string(f.front)).c_str(),
                     std::string(to_string(f.policy)).c_str(), std::string(to_string(f.schedule)).c_str(), f.shuffle, f.error.c_str());
    }
    return result.failures.empty() ? 0 : kRuntime;
}

int cmd_stats(std::string const& dir, double alpha)
{
    auto const cells = archtrunc::rebuild_summary(dir, alpha);
    archtrunc::write_summary_table(std::cout, cells);
    return 0;
}

int cmd_plotdata(std::string const& dir)
{
    auto const written = archtrunc::rebuild_plot_data(dir);
    std::printf("%zu plot-data files written to %s/plotdata\n", written, dir.c_str());
    return 0;
}

int cmd_selftest(double perturb)
{
    archtrunc::SelftestOptions options;
    options.hv_perturbation = perturb;
    auto const report = archtrunc::run_selftest(options);
    for (auto const& f : report.failures) {
        std::printf("FAIL %s\n", f.c_str());
    }
    std::printf("%zu checks in %zu groups, %zu failed\n", report.checks, report.groups.size(), report.failures.size());
    return report.ok() ? 0 : kRuntime;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Archive truncation experiments"};
    app.require_subcommand(1);

    auto* generate = app.add_subcommand("generate", "Write a shuffled input sequence (or the IGD reference front)");
    std::string front;
    std::size_t n = 5000;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> shuffle_seed;
    std::optional<std::size_t> batch_size;
    std::string out_file;
    bool reference = false;
    generate->add_option("--front", front, "simplex | inverted")->required();
    generate->add_option("--n", n, "Number of solutions");
    generate->add_option("--seed", seed, "Base sample seed");
    generate->add_option("--shuffle-seed", shuffle_seed, "Arrival order seed (defaults to --seed)");
    generate->add_option("--batch-size", batch_size, "Batch size (default: one batch)");
    generate->add_option("--out", out_file, "Output CSV")->required();
    generate->add_flag("--reference", reference, "Write the IGD reference points instead");

    auto* run = app.add_subcommand("run", "Run the experiment grid");
    std::string config;
    std::optional<std::size_t> workers;
    std::optional<std::string> out_dir;
    run->add_option("--config", config, "Experiment config (JSON)")->required();
    run->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    run->add_option("--out", out_dir, "Results directory (overrides output_dir)");

    auto* stats = app.add_subcommand("stats", "Rebuild the summary from raw_results.csv");
    std::string results;
    double alpha = 0.05;
    stats->add_option("--results", results, "Results directory")->required();
    stats->add_option("--alpha", alpha, "Significance level");

    auto* plotdata = app.add_subcommand("plotdata", "Rebuild plot-data CSVs from raw results and archives");
    plotdata->add_option("--results", results, "Results directory")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the embedded oracle suite");
    double perturb = 1.0;
    selftest->add_option("--perturb-hv", perturb, "Scale every hypervolume (negative control)");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        auto const code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(front, n, seed, shuffle_seed, batch_size, out_file, reference);
        }
        if (run->parsed()) {
            return cmd_run(config, workers, out_dir);
        }
        if (stats->parsed()) {
            return cmd_stats(results, alpha);
        }
        if (plotdata->parsed()) {
            return cmd_plotdata(results);
        }
        return cmd_selftest(perturb);
    } catch (UsageError const& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (std::exception const& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kRuntime;
    }
}

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "archtrunc/policies.hpp"
#include "archtrunc/refsets.hpp"
#include "archtrunc/scheduler.hpp"
#include "archtrunc/stats.hpp"

namespace archtrunc {

struct ExperimentConfig {
    std::vector<FrontKind> fronts{FrontKind::Simplex, FrontKind::InvertedSimplex};
    std::size_t objectives{3};
    std::size_t n_solutions{5000};
    std::size_t mu{105};
    std::size_t n_shuffles{31};
    std::vector<PolicyId> policies{kAllPolicies.begin(), kAllPolicies.end()};
    std::vector<Schedule> schedules{kAllSchedules.begin(), kAllSchedules.end()};
    /// Base sample seed; shuffle k uses base_seed + k.
    std::uint64_t base_seed{1};
    double theta{5.0};
    double kappa{0.05};
    double hv_ref_factor{1.1};
    /// "fixed" (the true front's ideal, the origin) or "running-min".
    std::string ideal_mode{"fixed"};
    /// Das-Dennis divisions for the mu reference vectors; 0 derives H from mu.
    std::size_t weight_divisions{0};
    /// Das-Dennis divisions of the IGD reference front (99 gives 5050 points for m = 3).
    std::size_t igd_divisions{99};
    double alpha{0.05};
    std::filesystem::path output_dir{"results"};
    std::size_t workers{1};
    /// Write per-event ideal/nadir traces for every run.
    bool record_diagnostics{false};

    void validate() const;
};

/// Rejects unknown keys and malformed values with a message naming the key.
[[nodiscard]] ExperimentConfig parse_config(std::string const& json_text);
[[nodiscard]] ExperimentConfig load_config(std::filesystem::path const& path);
[[nodiscard]] std::string config_to_json(ExperimentConfig const& config);

struct ResultRecord {
    FrontKind front{};
    PolicyId policy{};
    Schedule schedule{};
    std::size_t shuffle{};
    double igd{};
    double duration_ms{};
    std::vector<Solution> final_archive;
};

struct FailedRun {
    FrontKind front{};
    PolicyId policy{};
    Schedule schedule{};
    std::size_t shuffle{};
    std::string error;
};

struct SummaryCell {
    FrontKind front{};
    PolicyId policy{};
    Schedule schedule{};
    std::size_t runs{};
    double mean{};
    double std_dev{};
    std::string letters;
};

struct ExperimentResult {
    std::filesystem::path directory;
    std::vector<ResultRecord> records;
    std::vector<FailedRun> failures;
    std::vector<SummaryCell> summary;
    double wall_seconds{};
};

/// Derives the Das-Dennis divisions H with C(H + m - 1, m - 1) == mu.
[[nodiscard]] std::size_t divisions_for(std::size_t mu, std::size_t m);

[[nodiscard]] PolicyContext make_policy_context(ExperimentConfig const& config);

/// Runs the whole grid and writes every output file; deterministic for a
/// fixed config regardless of the worker count.
[[nodiscard]] ExperimentResult run_experiment(ExperimentConfig const& config);

/// Position of the median IGD (lower middle for even counts); among equal
/// values the lowest position wins.
[[nodiscard]] std::size_t select_median_run(std::span<double const> igds);

/// Per (front, policy) the schedules are compared against each other.
[[nodiscard]] std::vector<SummaryCell> summarize_records(std::span<ResultRecord const> records, double alpha);

void write_raw_results(std::ostream& out, std::span<ResultRecord const> records);
[[nodiscard]] std::vector<ResultRecord> read_raw_results(std::istream& in);
void write_summary_csv(std::ostream& out, std::span<SummaryCell const> cells);
/// Fixed-width table: rows are front x schedule, columns are policies.
void write_summary_table(std::ostream& out, std::span<SummaryCell const> cells);

/// Archive points, the front's corner vertices and the cell IGD, one file per panel.
void export_plot_data(std::filesystem::path const& file, FrontKind front, std::span<Solution const> archive, double igd);
[[nodiscard]] std::string cell_file_stem(FrontKind front, PolicyId policy, Schedule schedule);

/// Re-derives summary.csv / summary.txt from raw_results.csv.
[[nodiscard]] std::vector<SummaryCell> rebuild_summary(std::filesystem::path const& results_dir, double alpha);
/// Re-derives plotdata/ from raw_results.csv and archives/. Returns the number of files written.
std::size_t rebuild_plot_data(std::filesystem::path const& results_dir);

} // namespace archtrunc

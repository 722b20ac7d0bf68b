#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "archtrunc/core.hpp"
#include "archtrunc/policies.hpp"
#include "archtrunc/refsets.hpp"

namespace archtrunc {

/// When the archive is cut back to capacity: after every arrival, after
/// every mu arrivals, or once at the end.
enum class Schedule { Immediate, Batch, Unbounded };

inline constexpr std::array kAllSchedules{Schedule::Immediate, Schedule::Batch, Schedule::Unbounded};

[[nodiscard]] std::string_view to_string(Schedule s) noexcept;
[[nodiscard]] Schedule parse_schedule(std::string_view name);
/// Batch size the sequence builder should use for this schedule.
[[nodiscard]] BatchSize batch_size_for(Schedule s, std::size_t mu) noexcept;

struct EventDiagnostics {
    std::size_t batch_index{};
    std::size_t size_before{};
    std::size_t size_after{};
    std::optional<ObjectiveVector> ideal;
    std::optional<ObjectiveVector> nadir;
    bool nadir_fallback{false};
};

struct RunTrace {
    Archive final_archive;
    std::size_t truncation_event_count{};
    std::vector<EventDiagnostics> events; // only filled when requested
};

struct RunOptions {
    bool record_diagnostics{false};
    /// Root of the per-event NSGA-III niching seeds.
    std::uint64_t seed{};
};

/// Feeds `seq` batch by batch into an archive of capacity mu. A truncation
/// event happens whenever archive + batch exceeds mu; MOEA/D additionally
/// refreshes its per-weight incumbents on every batch.
[[nodiscard]] RunTrace run_archiving(InputSequence const& seq, PolicyId policy, Schedule schedule, std::size_t mu,
                                     PolicyContext const& ctx, RunOptions const& options = {});

} // namespace archtrunc

#include "archtrunc/scheduler.hpp"

#include <algorithm>
#include <string>

#include "archtrunc/random.hpp"

namespace archtrunc {

std::string_view to_string(Schedule s) noexcept
{
    switch (s) {
    case Schedule::Immediate:
        return "immediate";
    case Schedule::Batch:
        return "batch";
    case Schedule::Unbounded:
        return "unbounded";
    }
    return "unknown";
}

Schedule parse_schedule(std::string_view name)
{
    for (auto s : kAllSchedules) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw ContractViolation("unknown schedule '" + std::string(name) + "'");
}

BatchSize batch_size_for(Schedule s, std::size_t mu) noexcept
{
    switch (s) {
    case Schedule::Immediate:
        return 1;
    case Schedule::Batch:
        return mu;
    case Schedule::Unbounded:
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

void check_structure(InputSequence const& seq, Schedule schedule, std::size_t mu)
{
    auto const bad = [&](std::string const& why) {
        throw ContractViolation("sequence does not match the " + std::string(to_string(schedule)) + " schedule: " + why);
    };
    switch (schedule) {
    case Schedule::Immediate:
        for (auto const& b : seq.batches) {
            if (b.size() != 1) {
                bad("every batch must hold one solution");
            }
        }
        break;
    case Schedule::Batch:
        for (std::size_t t = 0; t < seq.batches.size(); ++t) {
            auto const size = seq.batches[t].size();
            if (size > mu || size == 0 || (size != mu && t + 1 != seq.batches.size())) {
                bad("batches must hold mu solutions (the last may be partial)");
            }
        }
        break;
    case Schedule::Unbounded:
        if (seq.batches.size() > 1) {
            bad("expected a single batch");
        }
        break;
    }
}

} // namespace

RunTrace run_archiving(InputSequence const& seq, PolicyId policy, Schedule schedule, std::size_t mu, PolicyContext const& ctx,
                       RunOptions const& options)
{
    if (mu == 0) {
        throw ContractViolation("archive capacity must be positive");
    }
    if (uses_weights(policy) && ctx.weights.vectors.size() != mu) {
        throw ContractViolation(std::string(to_string(policy)) + " requires " + std::to_string(mu) + " weight vectors, context has " +
                                std::to_string(ctx.weights.vectors.size()));
    }
    check_structure(seq, schedule, mu);

    RunTrace trace;
    trace.final_archive.capacity = mu;
    auto& members = trace.final_archive.members;

    PolicyContext event_ctx = ctx;
    std::optional<std::vector<double>> running_min;
    std::vector<Solution> cands;

    for (std::size_t t = 0; t < seq.batches.size(); ++t) {
        auto const& batch = seq.batches[t];
        cands = members;
        cands.insert(cands.end(), batch.begin(), batch.end());
        bool const overflow = cands.size() > mu;

        if (policy == PolicyId::MoeadPbi) {
            if (!ctx.fixed_ideal) {
                for (auto const& s : batch) {
                    if (!running_min) {
                        running_min.emplace(s.objectives.begin(), s.objectives.end());
                    }
                    for (std::size_t k = 0; k < running_min->size(); ++k) {
                        (*running_min)[k] = std::min((*running_min)[k], s.objectives[k]);
                    }
                }
                if (running_min) {
                    event_ctx.fixed_ideal = ObjectiveVector(*running_min);
                }
            }
            members = truncate_moead(cands, mu, event_ctx);
            if (overflow) {
                ++trace.truncation_event_count;
                if (options.record_diagnostics) {
                    trace.events.push_back({t, cands.size(), members.size(), event_ctx.fixed_ideal, std::nullopt, false});
                }
            }
            continue;
        }

        if (!overflow) {
            members = std::move(cands);
            continue;
        }

        event_ctx.niching_seed = mix_seed(options.seed, trace.truncation_event_count);
        TruncationDiagnostics diag;
        members = truncate(policy, cands, mu, event_ctx, options.record_diagnostics ? &diag : nullptr);
        ++trace.truncation_event_count;
        if (options.record_diagnostics) {
            trace.events.push_back({t, cands.size(), members.size(), diag.ideal, diag.nadir, diag.nadir_fallback});
        }
    }
    return trace;
}

} // namespace archtrunc

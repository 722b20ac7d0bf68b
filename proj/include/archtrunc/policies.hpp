#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "archtrunc/core.hpp"
#include "archtrunc/hypervolume.hpp"
#include "archtrunc/refsets.hpp"

namespace archtrunc {

enum class PolicyId { Nsga2OneOff, Nsga2Iterative, SmsRemoval, HvInclusion, Ibea, MoeadPbi, Nsga3 };

inline constexpr std::array kAllPolicies{PolicyId::Nsga2OneOff, PolicyId::Nsga2Iterative, PolicyId::SmsRemoval,
                                         PolicyId::HvInclusion, PolicyId::Ibea,           PolicyId::MoeadPbi,
                                         PolicyId::Nsga3};

/// Canonical names: nsga2-oneoff, nsga2-iterative, sms-removal, hv-inclusion, ibea, moead-pbi, nsga3.
[[nodiscard]] std::string_view to_string(PolicyId id) noexcept;
[[nodiscard]] PolicyId parse_policy(std::string_view name);
/// Whether the policy needs a weight set of exactly mu vectors.
[[nodiscard]] bool uses_weights(PolicyId id) noexcept;

/// How the hypervolume reference point is derived for each truncation event.
struct HvReferenceRule {
    /// factor * componentwise max of the candidates, unless `fixed` is set.
    double factor{1.1};
    std::optional<ObjectiveVector> fixed;

    [[nodiscard]] ReferencePoint resolve(std::span<Solution const> cands) const;
};

struct PolicyContext {
    WeightVectorSet weights;
    double theta{5.0};
    double kappa{0.05};
    HvReferenceRule hv_ref;
    /// MOEA/D ideal point; nullopt means running minimum of what was seen.
    std::optional<ObjectiveVector> fixed_ideal;
    /// Seed of the NSGA-III niching tie-breaks for one truncation event.
    std::uint64_t niching_seed{};
    /// Drop dominated candidates before truncating.
    bool dominance_prefilter{false};
};

/// Filled by policies that normalise (NSGA-III).
struct TruncationDiagnostics {
    std::optional<ObjectiveVector> ideal;
    std::optional<ObjectiveVector> nadir;
    bool nadir_fallback{false};
};

/// Per-objective normalised neighbour gaps; the first and last member of
/// each objective's (value, id) order get +infinity. Aligned with input.
[[nodiscard]] std::vector<double> crowding_distance(std::span<Solution const> front);

[[nodiscard]] std::vector<Solution> truncate_nsga2_oneoff(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx);
[[nodiscard]] std::vector<Solution> truncate_nsga2_iterative(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx);
[[nodiscard]] std::vector<Solution> truncate_sms_removal(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx);
[[nodiscard]] std::vector<Solution> truncate_hv_inclusion(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx);
[[nodiscard]] std::vector<Solution> truncate_ibea(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx);
/// Per-weight PBI incumbents in arrival order; may return fewer than mu.
[[nodiscard]] std::vector<Solution> truncate_moead(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx);
[[nodiscard]] std::vector<Solution> truncate_nsga3(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx,
                                                   TruncationDiagnostics* diagnostics = nullptr);

[[nodiscard]] std::vector<Solution> truncate(PolicyId policy, std::span<Solution const> cands, std::size_t mu,
                                             PolicyContext const& ctx, TruncationDiagnostics* diagnostics = nullptr);

} // namespace archtrunc

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "archtrunc/core.hpp"
#include "archtrunc/hypervolume.hpp"

// Slow, independent reference computations. Nothing here shares code with
// the production paths it is used to check.
namespace archtrunc::oracle {

/// Exact hypervolume by inclusion-exclusion over all non-empty subsets (n <= ~18).
[[nodiscard]] double hypervolume_inclusion_exclusion(std::span<ObjectiveVector const> set, ReferencePoint const& ref);

struct MonteCarloEstimate {
    double value;
    double standard_error;
};

/// Uniform sampling in [componentwise min, ref].
[[nodiscard]] MonteCarloEstimate hypervolume_monte_carlo(std::span<ObjectiveVector const> set, ReferencePoint const& ref,
                                                         std::size_t samples, std::uint64_t seed);

/// Indices (ascending) of the greedy least-contributor removal, evaluated by
/// leave-one-out inclusion-exclusion; ties remove the lower index.
[[nodiscard]] std::vector<std::size_t> greedy_removal(std::span<ObjectiveVector const> set, ReferencePoint const& ref, std::size_t keep);

/// Greedy largest-gain inclusion; ties pick the lower index.
[[nodiscard]] std::vector<std::size_t> greedy_inclusion(std::span<ObjectiveVector const> set, ReferencePoint const& ref, std::size_t keep);

/// Largest hypervolume over all subsets of size `keep`.
[[nodiscard]] double best_subset_hypervolume(std::span<ObjectiveVector const> set, ReferencePoint const& ref, std::size_t keep);

/// Two-sided rank-sum p-value by enumerating every split of the pooled sample.
[[nodiscard]] double rank_sum_permutation_p(std::span<double const> x, std::span<double const> y);

} // namespace archtrunc::oracle

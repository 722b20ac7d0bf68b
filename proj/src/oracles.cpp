#include "archtrunc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "archtrunc/random.hpp"

namespace archtrunc::oracle {

double hypervolume_inclusion_exclusion(std::span<ObjectiveVector const> set, ReferencePoint const& ref)
{
    auto const n = set.size();
    auto const m = ref.values.size();
    double total = 0.0;
    std::vector<double> corner(m);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::fill(corner.begin(), corner.end(), -std::numeric_limits<double>::infinity());
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                ++bits;
                for (std::size_t k = 0; k < m; ++k) {
                    corner[k] = std::max(corner[k], set[i][k]);
                }
            }
        }
        double box = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            box *= std::max(0.0, ref.values[k] - corner[k]);
        }
        total += (bits % 2 == 1) ? box : -box;
    }
    return total;
}

MonteCarloEstimate hypervolume_monte_carlo(std::span<ObjectiveVector const> set, ReferencePoint const& ref, std::size_t samples,
                                           std::uint64_t seed)
{
    auto const m = ref.values.size();
    if (set.empty()) {
        return {0.0, 0.0};
    }
    std::vector<double> lo(m);
    for (std::size_t k = 0; k < m; ++k) {
        lo[k] = ref.values[k];
        for (auto const& z : set) {
            lo[k] = std::min(lo[k], z[k]);
        }
    }
    double box = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        box *= ref.values[k] - lo[k];
    }
    Rng rng(seed);
    std::vector<double> u(m);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t k = 0; k < m; ++k) {
            u[k] = lo[k] + rng.uniform01() * (ref.values[k] - lo[k]);
        }
        for (auto const& z : set) {
            bool covered = true;
            for (std::size_t k = 0; k < m && covered; ++k) {
                covered = z[k] <= u[k];
            }
            if (covered) {
                ++hits;
                break;
            }
        }
    }
    double const p = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * p, box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

namespace {

// inclusion-exclusion sums leave rounding noise of this order on zero contributions
constexpr double kTieTolerance = 1e-12;

std::vector<ObjectiveVector> subset(std::span<ObjectiveVector const> set, std::vector<std::size_t> const& idx)
{
    std::vector<ObjectiveVector> out;
    for (auto i : idx) {
        out.push_back(set[i]);
    }
    return out;
}

} // namespace

std::vector<std::size_t> greedy_removal(std::span<ObjectiveVector const> set, ReferencePoint const& ref, std::size_t keep)
{
    std::vector<std::size_t> alive(set.size());
    std::iota(alive.begin(), alive.end(), std::size_t{0});
    while (alive.size() > keep) {
        double const full = hypervolume_inclusion_exclusion(subset(set, alive), ref);
        std::size_t worst = 0;
        double worst_loss = std::numeric_limits<double>::infinity();
        for (std::size_t pos = 0; pos < alive.size(); ++pos) {
            auto rest = alive;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
            double const loss = full - hypervolume_inclusion_exclusion(subset(set, rest), ref);
            if (loss < worst_loss - kTieTolerance) {
                worst_loss = loss;
                worst = pos;
            }
        }
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(worst));
    }
    return alive;
}

std::vector<std::size_t> greedy_inclusion(std::span<ObjectiveVector const> set, ReferencePoint const& ref, std::size_t keep)
{
    std::vector<std::size_t> chosen;
    std::vector<bool> taken(set.size(), false);
    while (chosen.size() < keep) {
        double const base = chosen.empty() ? 0.0 : hypervolume_inclusion_exclusion(subset(set, chosen), ref);
        std::size_t best = set.size();
        double best_gain = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (taken[i]) {
                continue;
            }
            auto with = chosen;
            with.push_back(i);
            double const gain = hypervolume_inclusion_exclusion(subset(set, with), ref) - base;
            if (gain > best_gain + kTieTolerance) {
                best_gain = gain;
                best = i;
            }
        }
        taken[best] = true;
        chosen.push_back(best);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

double best_subset_hypervolume(std::span<ObjectiveVector const> set, ReferencePoint const& ref, std::size_t keep)
{
    auto const n = set.size();
    if (keep >= n) {
        return hypervolume_inclusion_exclusion(set, ref);
    }
    std::vector<bool> selector(n, false);
    std::fill(selector.begin(), selector.begin() + static_cast<std::ptrdiff_t>(keep), true);
    double best = 0.0;
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (selector[i]) {
                idx.push_back(i);
            }
        }
        best = std::max(best, hypervolume_inclusion_exclusion(subset(set, idx), ref));
    } while (std::prev_permutation(selector.begin(), selector.end()));
    return best;
}

double rank_sum_permutation_p(std::span<double const> x, std::span<double const> y)
{
    std::vector<double> pooled(x.begin(), x.end());
    pooled.insert(pooled.end(), y.begin(), y.end());
    auto const n = pooled.size();

    // mid-ranks by counting, independent of any sort-based ranking
    std::vector<double> rank(n);
    for (std::size_t i = 0; i < n; ++i) {
        double below = 0.0;
        double equal = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            below += pooled[j] < pooled[i] ? 1.0 : 0.0;
            equal += pooled[j] == pooled[i] ? 1.0 : 0.0;
        }
        rank[i] = below + (equal + 1.0) / 2.0;
    }
    double observed = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        observed += rank[i];
    }

    std::size_t lower = 0;
    std::size_t upper = 0;
    std::size_t all = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != x.size()) {
            continue;
        }
        double w = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                w += rank[i];
            }
        }
        ++all;
        lower += w <= observed + 1e-9 ? 1 : 0;
        upper += w >= observed - 1e-9 ? 1 : 0;
    }
    return std::min(1.0, 2.0 * static_cast<double>(std::min(lower, upper)) / static_cast<double>(all));
}

} // namespace archtrunc::oracle

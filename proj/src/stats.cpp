#include "archtrunc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "archtrunc/core.hpp"

namespace archtrunc {

std::vector<double> mid_ranks(std::span<double const> pooled)
{
    std::vector<std::size_t> order(pooled.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return pooled[a] < pooled[b]; });
    std::vector<double> ranks(pooled.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) {
            ++j;
        }
        double const rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

namespace {

double normal_cdf(double z)
{
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// Exact null distribution of the doubled rank sum of the first sample: with
// mid-ranks, 2 * rank is always an integer.
double exact_p(std::vector<double> const& ranks, std::size_t nx, double observed)
{
    std::vector<std::size_t> doubled(ranks.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        doubled[i] = static_cast<std::size_t>(std::lround(2.0 * ranks[i]));
        total += doubled[i];
    }
    // ways[k][s]: subsets of size k with doubled sum s
    std::vector<std::vector<double>> ways(nx + 1, std::vector<double>(total + 1, 0.0));
    ways[0][0] = 1.0;
    for (auto r : doubled) {
        for (std::size_t k = nx; k >= 1; --k) {
            for (std::size_t s = total; s >= r; --s) {
                ways[k][s] += ways[k - 1][s - r];
                if (s == r) {
                    break;
                }
            }
        }
    }
    auto const target = static_cast<std::size_t>(std::lround(2.0 * observed));
    double all = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t s = 0; s <= total; ++s) {
        all += ways[nx][s];
        if (s <= target) {
            lower += ways[nx][s];
        }
        if (s >= target) {
            upper += ways[nx][s];
        }
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

} // namespace

double wilcoxon_rank_sum(std::span<double const> x, std::span<double const> y, WilcoxonOptions const& options)
{
    if (x.empty() || y.empty()) {
        throw ContractViolation("rank-sum test needs two non-empty samples");
    }
    std::vector<double> pooled(x.begin(), x.end());
    pooled.insert(pooled.end(), y.begin(), y.end());
    auto const ranks = mid_ranks(pooled);
    auto const nx = static_cast<double>(x.size());
    auto const ny = static_cast<double>(y.size());
    auto const n = nx + ny;
    double const w = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(x.size()), 0.0);

    if (pooled.size() <= options.exact_max_total) {
        return exact_p(ranks, x.size(), w);
    }

    // tie correction: sum over tie groups of t^3 - t
    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double ties = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) {
            ++j;
        }
        auto const t = static_cast<double>(j - i + 1);
        ties += t * t * t - t;
        i = j + 1;
    }
    double const variance = nx * ny / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
    if (!(variance > 0.0)) {
        return 1.0;
    }
    double diff = w - nx * (n + 1.0) / 2.0;
    if (options.continuity_correction) {
        diff -= diff > 0.0 ? 0.5 : (diff < 0.0 ? -0.5 : 0.0);
    }
    double const z = diff / std::sqrt(variance);
    return std::min(1.0, 2.0 * std::min(normal_cdf(z), normal_cdf(-z)));
}

std::string const& LetterAssignment::of(std::string const& label) const
{
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) {
            return letters[i];
        }
    }
    throw ContractViolation("no letters for label '" + label + "'");
}

LetterAssignment compact_letters(std::vector<std::string> const& labels, std::span<double const> means,
                                 std::vector<std::vector<double>> const& pairwise_p, double alpha)
{
    auto const n = labels.size();
    if (means.size() != n || pairwise_p.size() != n) {
        throw ContractViolation("compact_letters: labels, means and p-values must align");
    }
    std::vector<std::size_t> by_mean(n);
    std::iota(by_mean.begin(), by_mean.end(), std::size_t{0});
    std::stable_sort(by_mean.begin(), by_mean.end(), [&](auto a, auto b) { return means[a] < means[b]; });

    using Column = std::vector<bool>;
    std::vector<Column> columns;
    if (n > 0) {
        columns.emplace_back(n, true);
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!(pairwise_p[a][b] < alpha)) {
                continue;
            }
            // insert: split every column holding both members of a significant pair
            std::vector<Column> next;
            for (auto const& col : columns) {
                if (col[a] && col[b]) {
                    auto without_a = col;
                    without_a[a] = false;
                    auto without_b = col;
                    without_b[b] = false;
                    next.push_back(std::move(without_a));
                    next.push_back(std::move(without_b));
                } else {
                    next.push_back(col);
                }
            }
            // absorb: drop columns contained in another column
            std::vector<Column> kept;
            for (std::size_t i = 0; i < next.size(); ++i) {
                bool absorbed = false;
                for (std::size_t j = 0; j < next.size() && !absorbed; ++j) {
                    if (i == j) {
                        continue;
                    }
                    bool subset = true;
                    for (std::size_t k = 0; k < n && subset; ++k) {
                        subset = !next[i][k] || next[j][k];
                    }
                    // identical columns: keep only the first copy
                    absorbed = subset && (next[i] != next[j] || j < i);
                }
                if (!absorbed) {
                    kept.push_back(next[i]);
                }
            }
            columns = std::move(kept);
        }
    }

    // letter order follows the best-ranked member of each column
    auto const first_member = [&](Column const& col) {
        for (std::size_t r = 0; r < n; ++r) {
            if (col[by_mean[r]]) {
                return r;
            }
        }
        return n;
    };
    std::stable_sort(columns.begin(), columns.end(), [&](auto const& a, auto const& b) { return first_member(a) < first_member(b); });

    LetterAssignment out{labels, std::vector<std::string>(n)};
    for (std::size_t c = 0; c < columns.size(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            if (columns[c][i]) {
                out.letters[i] += static_cast<char>('a' + c);
            }
        }
    }
    return out;
}

double sample_mean(std::span<double const> values)
{
    if (values.empty()) {
        throw ContractViolation("mean of an empty sample");
    }
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_std(std::span<double const> values)
{
    if (values.size() < 2) {
        return 0.0;
    }
    if (std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); })) {
        return 0.0;
    }
    double const mean = sample_mean(values);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::vector<GroupSummary> summarize(std::span<SampleGroup const> groups, double alpha, WilcoxonOptions const& options)
{
    if (groups.size() < 2) {
        throw ContractViolation("summarize needs at least two groups");
    }
    auto const n = groups.size();
    std::vector<std::string> labels;
    std::vector<double> means;
    for (auto const& g : groups) {
        labels.push_back(g.label);
        means.push_back(sample_mean(g.values));
    }
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 1.0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            p[a][b] = p[b][a] = wilcoxon_rank_sum(groups[a].values, groups[b].values, options);
        }
    }
    auto const letters = compact_letters(labels, means, p, alpha);
    std::vector<GroupSummary> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({labels[i], means[i], sample_std(groups[i].values), letters.letters[i]});
    }
    return out;
}

std::string format_scientific(double value, int significant_digits)
{
    char buf[48];
    auto const len = std::snprintf(buf, sizeof buf, "%.*e", std::max(0, significant_digits - 1), value);
    return {buf, static_cast<std::size_t>(len)};
}

} // namespace archtrunc

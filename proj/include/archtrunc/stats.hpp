#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace archtrunc {

struct WilcoxonOptions {
    /// Exact permutation distribution when |x| + |y| is at most this.
    std::size_t exact_max_total{12};
    bool continuity_correction{true};
};

/// Two-sided rank-sum p-value with mid-ranks for ties.
[[nodiscard]] double wilcoxon_rank_sum(std::span<double const> x, std::span<double const> y, WilcoxonOptions const& options = {});

/// Mid-ranks (1-based) of the pooled sample x ++ y.
[[nodiscard]] std::vector<double> mid_ranks(std::span<double const> pooled);

struct SampleGroup {
    std::string label;
    std::vector<double> values;
};

/// letters[i] belongs to labels[i]. Two labels share a letter iff their
/// pairwise p-value is >= alpha.
struct LetterAssignment {
    std::vector<std::string> labels;
    std::vector<std::string> letters;

    [[nodiscard]] std::string const& of(std::string const& label) const;
};

/// Insert-and-absorb compact letter display; 'a' goes to the group with the
/// lowest mean (lower is better).
[[nodiscard]] LetterAssignment compact_letters(std::vector<std::string> const& labels, std::span<double const> means,
                                               std::vector<std::vector<double>> const& pairwise_p, double alpha);

struct GroupSummary {
    std::string label;
    double mean{};
    double std_dev{};
    std::string letters;
};

[[nodiscard]] double sample_mean(std::span<double const> values);
/// n-1 divisor; exactly 0 for identical values.
[[nodiscard]] double sample_std(std::span<double const> values);

[[nodiscard]] std::vector<GroupSummary> summarize(std::span<SampleGroup const> groups, double alpha,
                                                  WilcoxonOptions const& options = {});

/// d.ddde+-dd style with the given number of significant digits.
[[nodiscard]] std::string format_scientific(double value, int significant_digits);

} // namespace archtrunc

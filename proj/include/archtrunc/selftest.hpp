#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace archtrunc {

struct SelftestOptions {
    std::uint64_t seed{20240611};
    std::size_t monte_carlo_samples{1'000'000};
    std::size_t monte_carlo_sets{50};
    /// Test hook: scales every hypervolume before it is compared with the
    /// Monte-Carlo estimate. Anything but 1 should make the suite fail.
    double hv_perturbation{1.0};
};

struct SelftestReport {
    std::size_t checks{};
    std::vector<std::string> groups;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

/// Embedded oracle suite: hypervolume against Monte-Carlo, greedy
/// hypervolume subset selection against brute force, the exact rank-sum
/// test against full enumeration, and crowding-distance hand cases.
[[nodiscard]] SelftestReport run_selftest(SelftestOptions const& options = {});

} // namespace archtrunc

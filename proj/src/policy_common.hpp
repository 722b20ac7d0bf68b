#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "archtrunc/core.hpp"

namespace archtrunc::detail {

/// Candidates sorted by id. Order-insensitive policies work on this view so
/// that their output depends on the candidate set alone.
inline std::vector<Solution> by_id(std::span<Solution const> cands)
{
    std::vector<Solution> out(cands.begin(), cands.end());
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i - 1].id == out[i].id) {
            throw ContractViolation("duplicate solution id " + std::to_string(out[i].id) + " in candidate set");
        }
    }
    return out;
}

inline std::vector<Solution> pick(std::span<Solution const> from, std::span<std::size_t const> indices)
{
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Solution> out;
    out.reserve(sorted.size());
    for (auto i : sorted) {
        out.push_back(from[i]);
    }
    return out;
}

inline std::size_t common_dimension(std::span<Solution const> cands)
{
    if (cands.empty()) {
        return 0;
    }
    auto const& first = cands.front().objectives;
    for (auto const& s : cands) {
        require_same_dimension(s.objectives, first);
    }
    return first.size();
}

} // namespace archtrunc::detail

#pragma once

#include <algorithm>
#include <vector>

#include "archtrunc/core.hpp"
#include "archtrunc/random.hpp"

namespace testing {

inline std::vector<archtrunc::Solution> solutions(std::vector<archtrunc::ObjectiveVector> const& points)
{
    std::vector<archtrunc::Solution> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        out.push_back({i, points[i]});
    }
    return out;
}

inline std::vector<archtrunc::ObjectiveVector> random_points(archtrunc::Rng& rng, std::size_t n, std::size_t m)
{
    std::vector<archtrunc::ObjectiveVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v(m);
        for (auto& x : v) {
            x = rng.uniform01();
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

/// Random mutually nondominated points on the curve x^2 + y = 1 (2D) or a
/// simplex patch (3D).
inline std::vector<archtrunc::ObjectiveVector> random_front(archtrunc::Rng& rng, std::size_t n, std::size_t m)
{
    std::vector<archtrunc::ObjectiveVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (m == 2) {
            double const a = rng.uniform01();
            out.push_back({a, 1.0 - a * a});
        } else {
            double a = rng.uniform01();
            double b = rng.uniform01();
            if (a + b > 1.0) {
                a = 1.0 - a;
                b = 1.0 - b;
            }
            out.push_back({a, b, 1.0 - a - b});
        }
    }
    return out;
}

inline std::vector<archtrunc::SolutionId> ids(std::vector<archtrunc::Solution> const& set)
{
    std::vector<archtrunc::SolutionId> out;
    for (auto const& s : set) {
        out.push_back(s.id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace testing

#include <algorithm>
#include <limits>
#include <numeric>

#include "archtrunc/policies.hpp"
#include "policy_common.hpp"

namespace archtrunc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::size_t> sorted_by_objective(std::span<Solution const> front, std::span<std::size_t const> members, std::size_t k)
{
    std::vector<std::size_t> order(members.begin(), members.end());
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
        auto const va = front[a].objectives[k];
        auto const vb = front[b].objectives[k];
        return va != vb ? va < vb : front[a].id < front[b].id;
    });
    return order;
}

/// Crowding distance restricted to a subset; the removal loop below keeps
/// this same structure (per-objective neighbour lists) up to date.
class CrowdingState {
public:
    CrowdingState(std::span<Solution const> front, std::span<std::size_t const> members)
        : front_(front)
        , m_(front.empty() ? 0 : front.front().objectives.size())
        , prev_(m_, std::vector<std::size_t>(front.size(), kNone))
        , next_(m_, std::vector<std::size_t>(front.size(), kNone))
        , head_(m_, kNone)
        , tail_(m_, kNone)
        , distance_(front.size(), 0.0)
        , alive_(front.size(), false)
    {
        for (auto i : members) {
            alive_[i] = true;
        }
        for (std::size_t k = 0; k < m_; ++k) {
            auto const order = sorted_by_objective(front, members, k);
            if (order.empty()) {
                continue;
            }
            head_[k] = order.front();
            tail_[k] = order.back();
            for (std::size_t r = 0; r < order.size(); ++r) {
                prev_[k][order[r]] = r > 0 ? order[r - 1] : kNone;
                next_[k][order[r]] = r + 1 < order.size() ? order[r + 1] : kNone;
            }
        }
        for (auto i : members) {
            distance_[i] = compute(i);
        }
    }

    [[nodiscard]] double distance(std::size_t i) const { return distance_[i]; }

    void remove(std::size_t i)
    {
        alive_[i] = false;
        bool boundary_changed = false;
        std::vector<std::size_t> touched;
        for (std::size_t k = 0; k < m_; ++k) {
            auto const p = prev_[k][i];
            auto const n = next_[k][i];
            if (p != kNone) {
                next_[k][p] = n;
                touched.push_back(p);
            } else {
                head_[k] = n;
                boundary_changed = true;
            }
            if (n != kNone) {
                prev_[k][n] = p;
                touched.push_back(n);
            } else {
                tail_[k] = p;
                boundary_changed = true;
            }
        }
        if (boundary_changed) {
            for (std::size_t j = 0; j < front_.size(); ++j) {
                if (alive_[j]) {
                    distance_[j] = compute(j);
                }
            }
            return;
        }
        for (auto j : touched) {
            distance_[j] = compute(j);
        }
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    [[nodiscard]] double compute(std::size_t i) const
    {
        double d = 0.0;
        for (std::size_t k = 0; k < m_; ++k) {
            if (prev_[k][i] == kNone || next_[k][i] == kNone) {
                return kInf;
            }
            double const range = front_[tail_[k]].objectives[k] - front_[head_[k]].objectives[k];
            if (range > 0.0) {
                d += (front_[next_[k][i]].objectives[k] - front_[prev_[k][i]].objectives[k]) / range;
            }
        }
        return d;
    }

    std::span<Solution const> front_;
    std::size_t m_;
    std::vector<std::vector<std::size_t>> prev_;
    std::vector<std::vector<std::size_t>> next_;
    std::vector<std::size_t> head_;
    std::vector<std::size_t> tail_;
    std::vector<double> distance_;
    std::vector<bool> alive_;
};

enum class SplitMode { OneOff, Iterative };

std::vector<Solution> truncate_nsga2(std::span<Solution const> input, std::size_t mu, SplitMode mode)
{
    if (input.size() <= mu) {
        return {input.begin(), input.end()};
    }
    auto const cands = detail::by_id(input);
    detail::common_dimension(cands);
    auto const fronts = nondominated_sort_indices(cands);

    std::vector<std::size_t> kept;
    kept.reserve(mu);
    for (auto const& front : fronts) {
        if (kept.size() + front.size() <= mu) {
            kept.insert(kept.end(), front.begin(), front.end());
            if (kept.size() == mu) {
                break;
            }
            continue;
        }
        auto const slots = mu - kept.size();
        CrowdingState crowding(cands, front);
        if (mode == SplitMode::OneOff) {
            std::vector<std::size_t> order(front.begin(), front.end());
            std::sort(order.begin(), order.end(), [&](auto a, auto b) {
                auto const da = crowding.distance(a);
                auto const db = crowding.distance(b);
                return da != db ? da > db : cands[a].id < cands[b].id;
            });
            kept.insert(kept.end(), order.begin(), order.begin() + static_cast<std::ptrdiff_t>(slots));
        } else {
            std::vector<std::size_t> alive(front.begin(), front.end());
            while (alive.size() > slots) {
                auto worst = alive.begin();
                for (auto it = alive.begin(); it != alive.end(); ++it) {
                    auto const d = crowding.distance(*it);
                    auto const dw = crowding.distance(*worst);
                    if (d < dw || (d == dw && cands[*it].id > cands[*worst].id)) {
                        worst = it;
                    }
                }
                crowding.remove(*worst);
                alive.erase(worst);
            }
            kept.insert(kept.end(), alive.begin(), alive.end());
        }
        break;
    }
    return detail::pick(cands, kept);
}

} // namespace

std::vector<double> crowding_distance(std::span<Solution const> front)
{
    detail::common_dimension(front);
    std::vector<std::size_t> all(front.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    CrowdingState state(front, all);
    std::vector<double> out(front.size());
    for (std::size_t i = 0; i < front.size(); ++i) {
        out[i] = state.distance(i);
    }
    return out;
}

std::vector<Solution> truncate_nsga2_oneoff(std::span<Solution const> cands, std::size_t mu, PolicyContext const&)
{
    return truncate_nsga2(cands, mu, SplitMode::OneOff);
}

std::vector<Solution> truncate_nsga2_iterative(std::span<Solution const> cands, std::size_t mu, PolicyContext const&)
{
    return truncate_nsga2(cands, mu, SplitMode::Iterative);
}

} // namespace archtrunc

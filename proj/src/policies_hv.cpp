#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "archtrunc/policies.hpp"
#include "policy_common.hpp"

namespace archtrunc {

ReferencePoint HvReferenceRule::resolve(std::span<Solution const> cands) const
{
    if (fixed) {
        return {*fixed};
    }
    if (cands.empty()) {
        throw ContractViolation("cannot derive a hypervolume reference point from an empty set");
    }
    auto const m = detail::common_dimension(cands);
    std::vector<double> upper(m);
    for (std::size_t k = 0; k < m; ++k) {
        double hi = cands.front().objectives[k];
        for (auto const& s : cands) {
            hi = std::max(hi, s.objectives[k]);
        }
        upper[k] = factor * hi;
        if (!(upper[k] > hi)) {
            // factor * max does not clear non-positive maxima; fall back to an additive margin
            upper[k] = hi + (factor - 1.0) * std::max(1.0, std::abs(hi));
        }
    }
    return {ObjectiveVector(std::move(upper))};
}

namespace {

struct Entry {
    double value;
    SolutionId id;
    std::size_t index;
};

// Lexicographic (value, id) order; the removal heap pops the smallest.
struct RemovalOrder {
    bool operator()(Entry const& a, Entry const& b) const noexcept
    {
        return std::tie(a.value, a.id) > std::tie(b.value, b.id);
    }
};

// Largest value first, lower id on ties.
struct InclusionOrder {
    bool operator()(Entry const& a, Entry const& b) const noexcept
    {
        return a.value != b.value ? a.value < b.value : a.id > b.id;
    }
};

} // namespace

// Removing points never shrinks the exclusive volume of the survivors, so a
// stale contribution is a lower bound. The popped entry is re-evaluated and
// accepted once it still precedes every other (possibly stale) entry.
std::vector<Solution> truncate_sms_removal(std::span<Solution const> input, std::size_t mu, PolicyContext const& ctx)
{
    if (input.size() <= mu) {
        return {input.begin(), input.end()};
    }
    auto const cands = detail::by_id(input);
    auto const points = objectives_of(cands);
    HypervolumeEngine engine(points, ctx.hv_ref.resolve(cands));

    std::priority_queue<Entry, std::vector<Entry>, RemovalOrder> heap;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        heap.push({engine.exclusive(i), cands[i].id, i});
    }
    auto remaining = cands.size();
    while (remaining > mu) {
        auto top = heap.top();
        heap.pop();
        top.value = engine.exclusive(top.index);
        if (heap.empty() || !RemovalOrder{}(top, heap.top())) {
            engine.deactivate(top.index);
            --remaining;
        } else {
            heap.push(top);
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (engine.is_active(i)) {
            kept.push_back(i);
        }
    }
    return detail::pick(cands, kept);
}

// Marginal gains only shrink as the archive grows (submodularity), so stale
// gains are upper bounds and the same lazy scheme applies in reverse.
std::vector<Solution> truncate_hv_inclusion(std::span<Solution const> input, std::size_t mu, PolicyContext const& ctx)
{
    if (input.size() <= mu) {
        return {input.begin(), input.end()};
    }
    auto const cands = detail::by_id(input);
    auto const points = objectives_of(cands);
    HypervolumeEngine engine(points, ctx.hv_ref.resolve(cands), false);

    std::priority_queue<Entry, std::vector<Entry>, InclusionOrder> heap;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        heap.push({engine.exclusive(i), cands[i].id, i});
    }
    std::vector<std::size_t> chosen;
    chosen.reserve(mu);
    while (chosen.size() < mu) {
        auto top = heap.top();
        heap.pop();
        top.value = engine.exclusive(top.index);
        if (heap.empty() || !InclusionOrder{}(top, heap.top())) {
            engine.activate(top.index);
            chosen.push_back(top.index);
        } else {
            heap.push(top);
        }
    }
    return detail::pick(cands, chosen);
}

} // namespace archtrunc

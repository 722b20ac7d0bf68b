#include "archtrunc/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace archtrunc {

namespace {

void validate(std::vector<double> const& values)
{
    if (values.size() < 2) {
        throw ContractViolation("objective vector needs at least two objectives");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ContractViolation("objective vector entries must be finite");
        }
    }
}

} // namespace

ObjectiveVector::ObjectiveVector(std::vector<double> values)
    : values_(std::move(values))
{
    validate(values_);
}

ObjectiveVector::ObjectiveVector(std::initializer_list<double> values)
    : values_(values)
{
    validate(values_);
}

void require_same_dimension(ObjectiveVector const& a, ObjectiveVector const& b)
{
    if (a.size() != b.size()) {
        throw ContractViolation("objective dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

bool dominates(ObjectiveVector const& a, ObjectiveVector const& b)
{
    require_same_dimension(a, b);
    bool strictly_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        strictly_better = strictly_better || a[i] < b[i];
    }
    return strictly_better;
}

std::vector<Solution> nondominated_filter(std::span<Solution const> set)
{
    std::vector<Solution> out;
    for (auto const& candidate : set) {
        bool dominated = false;
        for (auto const& other : set) {
            if (dominates(other.objectives, candidate.objectives)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            out.push_back(candidate);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> nondominated_sort_indices(std::span<Solution const> set)
{
    auto const n = set.size();
    std::vector<std::vector<std::size_t>> dominated_by_me(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts;
    if (n == 0) {
        return fronts;
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(set[i].objectives, set[j].objectives)) {
                dominated_by_me[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(set[j].objectives, set[i].objectives)) {
                dominated_by_me[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current) {
            for (auto j : dominated_by_me[i]) {
                if (--domination_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<Front> fast_nondominated_sort(std::span<Solution const> set)
{
    std::vector<Front> fronts;
    auto layers = nondominated_sort_indices(set);
    fronts.reserve(layers.size());
    for (std::size_t rank = 0; rank < layers.size(); ++rank) {
        Front front{rank, {}};
        front.members.reserve(layers[rank].size());
        for (auto i : layers[rank]) {
            front.members.push_back(set[i]);
        }
        fronts.push_back(std::move(front));
    }
    return fronts;
}

std::vector<ObjectiveVector> objectives_of(std::span<Solution const> set)
{
    std::vector<ObjectiveVector> out;
    out.reserve(set.size());
    for (auto const& s : set) {
        out.push_back(s.objectives);
    }
    return out;
}

std::string to_string(ObjectiveVector const& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    os << ')';
    return os.str();
}

} // namespace archtrunc

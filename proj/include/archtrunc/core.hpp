#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace archtrunc {

/// Raised when a caller breaks an operation's precondition (dimension
/// mismatch, empty input where one is required, malformed vectors).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Point in m-dimensional objective space, minimisation convention.
/// Entries are finite and m >= 2.
class ObjectiveVector {
public:
    ObjectiveVector() = default;
    explicit ObjectiveVector(std::vector<double> values);
    ObjectiveVector(std::initializer_list<double> values);

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
    [[nodiscard]] std::span<double const> values() const noexcept { return values_; }
    [[nodiscard]] auto begin() const noexcept { return values_.begin(); }
    [[nodiscard]] auto end() const noexcept { return values_.end(); }

    friend bool operator==(ObjectiveVector const&, ObjectiveVector const&) = default;

private:
    std::vector<double> values_;
};

using SolutionId = std::uint64_t;

struct Solution {
    SolutionId id{};
    ObjectiveVector objectives;

    friend bool operator==(Solution const&, Solution const&) = default;
};

struct Front {
    std::size_t rank{};
    std::vector<Solution> members;
};

/// Bounded solution store. Members keep their insertion order.
struct Archive {
    std::size_t capacity{};
    std::vector<Solution> members;
};

void require_same_dimension(ObjectiveVector const& a, ObjectiveVector const& b);

/// a dominates b: a_i <= b_i for all i and a != b.
[[nodiscard]] bool dominates(ObjectiveVector const& a, ObjectiveVector const& b);

/// Members not dominated by any other member, in input order. Equal vectors
/// never dominate each other, so duplicates are all kept.
[[nodiscard]] std::vector<Solution> nondominated_filter(std::span<Solution const> set);

/// Dominance-depth layering (fast nondominated sort).
[[nodiscard]] std::vector<Front> fast_nondominated_sort(std::span<Solution const> set);

/// Same layering expressed as index lists into `set`.
[[nodiscard]] std::vector<std::vector<std::size_t>> nondominated_sort_indices(std::span<Solution const> set);

[[nodiscard]] std::vector<ObjectiveVector> objectives_of(std::span<Solution const> set);

std::string to_string(ObjectiveVector const& v);

} // namespace archtrunc

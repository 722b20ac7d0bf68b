#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "archtrunc/core.hpp"

namespace archtrunc {

class UnsupportedDimension : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

/// Upper corner of the hypervolume region. Points that do not strictly
/// dominate it contribute no volume.
struct ReferencePoint {
    ObjectiveVector values;
};

/// Exact hypervolume for m in {2, 3}.
[[nodiscard]] double hypervolume(std::span<ObjectiveVector const> set, ReferencePoint const& ref);

/// hypervolume(set) - hypervolume(set \ {z}) for every z, aligned with input order.
[[nodiscard]] std::vector<double> hv_contributions(std::span<ObjectiveVector const> set, ReferencePoint const& ref);

namespace detail {

    /// Nondominated 2D staircase of boxes [x, x_hi] x [y, y_hi] clipped to a
    /// lower corner, with the covered area maintained on every insertion.
    class Staircase {
    public:
        void reset(double x_lo, double y_lo, double x_hi, double y_hi);
        void insert(double x, double y);

        [[nodiscard]] double covered() const noexcept { return covered_; }
        [[nodiscard]] bool full() const noexcept { return full_; }
        [[nodiscard]] double uncovered() const noexcept;

    private:
        double x_lo_{}, y_lo_{}, x_hi_{}, y_hi_{};
        double covered_{};
        bool full_{};
        std::vector<std::pair<double, double>> steps_; // x ascending, y descending
    };

} // namespace detail

/// Hypervolume bookkeeping over a fixed pool of points of which a subset is
/// active. exclusive(i) is the volume only point i dominates among the
/// active points; point i itself need not be active, so the same call yields
/// both removal losses and inclusion gains.
class HypervolumeEngine {
public:
    HypervolumeEngine(std::span<ObjectiveVector const> points, ReferencePoint const& ref, bool all_active = true);

    [[nodiscard]] std::size_t size() const noexcept { return active_.size(); }
    [[nodiscard]] std::size_t active_count() const noexcept { return order_.size(); }
    [[nodiscard]] bool is_active(std::size_t i) const noexcept { return active_[i]; }

    void activate(std::size_t i);
    void deactivate(std::size_t i);

    [[nodiscard]] double exclusive(std::size_t i) const;
    [[nodiscard]] double total() const;

private:
    [[nodiscard]] double const* point(std::size_t i) const noexcept { return coords_.data() + 3 * i; }
    [[nodiscard]] bool order_less(std::size_t a, std::size_t b) const noexcept;

    std::size_t dim_;
    double ref_[3]{};
    std::vector<double> coords_;
    std::vector<bool> inside_;   // strictly dominates the reference point
    std::vector<bool> active_;
    std::vector<std::size_t> order_; // active and inside, sorted by (last coordinate, index)
    mutable detail::Staircase stair_;
};

} // namespace archtrunc

#include "archtrunc/hypervolume.hpp"

#include <algorithm>
#include <limits>

namespace archtrunc {

namespace detail {

    void Staircase::reset(double x_lo, double y_lo, double x_hi, double y_hi)
    {
        x_lo_ = x_lo;
        y_lo_ = y_lo;
        x_hi_ = x_hi;
        y_hi_ = y_hi;
        covered_ = 0.0;
        full_ = false;
        steps_.clear();
    }

    double Staircase::uncovered() const noexcept
    {
        if (full_) {
            return 0.0;
        }
        return std::max(0.0, (x_hi_ - x_lo_) * (y_hi_ - y_lo_) - covered_);
    }

    void Staircase::insert(double x, double y)
    {
        if (x >= x_hi_ || y >= y_hi_) {
            return;
        }
        auto const by_x = [](std::pair<double, double> const& s, double v) { return s.first < v; };
        auto first = std::lower_bound(steps_.begin(), steps_.end(), x, by_x);

        double height = y_hi_;
        if (first != steps_.begin()) {
            height = std::prev(first)->second;
            if (height <= y) {
                return;
            }
        }
        if (first != steps_.end() && first->first == x && first->second <= y) {
            return;
        }

        double added = 0.0;
        double u = x;
        auto last = first;
        while (last != steps_.end() && last->second >= y) {
            added += (last->first - u) * (height - y);
            u = last->first;
            height = last->second;
            ++last;
        }
        double const end_x = last != steps_.end() ? last->first : x_hi_;
        added += (end_x - u) * (height - y);

        auto pos = steps_.erase(first, last);
        steps_.insert(pos, {x, y});
        covered_ += added;
        if (x <= x_lo_ && y <= y_lo_) {
            full_ = true;
        }
    }

} // namespace detail

namespace {

std::size_t checked_dimension(std::span<ObjectiveVector const> set, ReferencePoint const& ref)
{
    auto const m = ref.values.size();
    if (m > 3) {
        throw UnsupportedDimension("exact hypervolume supports 2 or 3 objectives, got " + std::to_string(m));
    }
    for (auto const& z : set) {
        require_same_dimension(z, ref.values);
    }
    return m;
}

} // namespace

HypervolumeEngine::HypervolumeEngine(std::span<ObjectiveVector const> points, ReferencePoint const& ref, bool all_active)
    : dim_(checked_dimension(points, ref))
    , coords_(3 * points.size(), 0.0)
    , inside_(points.size(), false)
    , active_(points.size(), false)
{
    for (std::size_t k = 0; k < dim_; ++k) {
        ref_[k] = ref.values[k];
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool inside = true;
        for (std::size_t k = 0; k < dim_; ++k) {
            coords_[3 * i + k] = points[i][k];
            inside = inside && points[i][k] < ref_[k];
        }
        inside_[i] = inside;
    }
    if (all_active) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            active_[i] = true;
            if (inside_[i]) {
                order_.push_back(i);
            }
        }
        std::sort(order_.begin(), order_.end(), [this](auto a, auto b) { return order_less(a, b); });
    }
}

bool HypervolumeEngine::order_less(std::size_t a, std::size_t b) const noexcept
{
    if (dim_ == 3 && point(a)[2] != point(b)[2]) {
        return point(a)[2] < point(b)[2];
    }
    return a < b;
}

void HypervolumeEngine::activate(std::size_t i)
{
    if (active_[i]) {
        return;
    }
    active_[i] = true;
    if (inside_[i]) {
        auto pos = std::lower_bound(order_.begin(), order_.end(), i, [this](auto a, auto b) { return order_less(a, b); });
        order_.insert(pos, i);
    }
}

void HypervolumeEngine::deactivate(std::size_t i)
{
    if (!active_[i]) {
        return;
    }
    active_[i] = false;
    if (inside_[i]) {
        auto pos = std::lower_bound(order_.begin(), order_.end(), i, [this](auto a, auto b) { return order_less(a, b); });
        order_.erase(pos);
    }
}

double HypervolumeEngine::exclusive(std::size_t i) const
{
    if (!inside_[i]) {
        return 0.0;
    }
    double const* p = point(i);
    stair_.reset(p[0], p[1], ref_[0], ref_[1]);

    if (dim_ == 2) {
        for (auto j : order_) {
            if (j == i) {
                continue;
            }
            double const* q = point(j);
            stair_.insert(std::max(q[0], p[0]), std::max(q[1], p[1]));
            if (stair_.full()) {
                return 0.0;
            }
        }
        return stair_.uncovered();
    }

    double volume = 0.0;
    double z_prev = p[2];
    for (auto j : order_) {
        if (j == i) {
            continue;
        }
        double const* q = point(j);
        double const z = std::max(q[2], p[2]);
        if (z > z_prev) {
            volume += stair_.uncovered() * (z - z_prev);
            z_prev = z;
        }
        stair_.insert(std::max(q[0], p[0]), std::max(q[1], p[1]));
        if (stair_.full()) {
            return volume;
        }
    }
    return volume + stair_.uncovered() * (ref_[2] - z_prev);
}

double HypervolumeEngine::total() const
{
    constexpr double lowest = -std::numeric_limits<double>::infinity();
    stair_.reset(lowest, lowest, ref_[0], ref_[1]);
    if (order_.empty()) {
        return 0.0;
    }
    if (dim_ == 2) {
        for (auto j : order_) {
            stair_.insert(point(j)[0], point(j)[1]);
        }
        return stair_.covered();
    }

    double volume = 0.0;
    double z_prev = point(order_.front())[2];
    for (auto j : order_) {
        double const* q = point(j);
        volume += stair_.covered() * (q[2] - z_prev);
        z_prev = q[2];
        stair_.insert(q[0], q[1]);
    }
    return volume + stair_.covered() * (ref_[2] - z_prev);
}

double hypervolume(std::span<ObjectiveVector const> set, ReferencePoint const& ref)
{
    return HypervolumeEngine(set, ref).total();
}

std::vector<double> hv_contributions(std::span<ObjectiveVector const> set, ReferencePoint const& ref)
{
    HypervolumeEngine engine(set, ref);
    std::vector<double> out(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        out[i] = engine.exclusive(i);
    }
    return out;
}

} // namespace archtrunc

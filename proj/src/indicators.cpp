#include "archtrunc/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace archtrunc {

IgdReferenceSet::IgdReferenceSet(std::vector<ObjectiveVector> points)
    : points_(std::move(points))
{
    if (points_.empty()) {
        throw ContractViolation("IGD reference set must not be empty");
    }
}

double additive_epsilon(ObjectiveVector const& a, ObjectiveVector const& b)
{
    require_same_dimension(a, b);
    double eps = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        eps = std::max(eps, a[i] - b[i]);
    }
    return eps;
}

IbeaFitnessState::IbeaFitnessState(std::span<ObjectiveVector const> set, double kappa)
    : n_(set.size())
    , m_(set.empty() ? 0 : set.front().size())
    , kappa_(kappa)
{
    if (n_ < 2) {
        throw ContractViolation("IBEA fitness needs at least two points");
    }
    if (!(kappa > 0.0)) {
        throw ContractViolation("IBEA kappa must be positive");
    }
    for (auto const& z : set) {
        require_same_dimension(z, set.front());
    }

    scaled_.resize(n_ * m_);
    for (std::size_t k = 0; k < m_; ++k) {
        double lo = set[0][k];
        double hi = set[0][k];
        for (auto const& z : set) {
            lo = std::min(lo, z[k]);
            hi = std::max(hi, z[k]);
        }
        double const range = hi - lo;
        for (std::size_t i = 0; i < n_; ++i) {
            scaled_[i * m_ + k] = range > 0.0 ? (set[i][k] - lo) / range : 0.0;
        }
    }

    double c = 0.0;
    for (std::size_t y = 0; y < n_; ++y) {
        for (std::size_t x = 0; x < n_; ++x) {
            if (x != y) {
                c = std::max(c, std::abs(indicator(y, x)));
            }
        }
    }
    c_ = c > 0.0 ? c : 1.0;
}

double IbeaFitnessState::indicator(std::size_t y, std::size_t x) const noexcept
{
    double const* a = scaled_.data() + y * m_;
    double const* b = scaled_.data() + x * m_;
    double eps = a[0] - b[0];
    for (std::size_t k = 1; k < m_; ++k) {
        eps = std::max(eps, a[k] - b[k]);
    }
    return eps;
}

double IbeaFitnessState::pressure(std::size_t y, std::size_t x) const noexcept
{
    return std::exp(-indicator(y, x) / (kappa_ * c_));
}

std::vector<double> ibea_fitness(std::span<ObjectiveVector const> set, double kappa)
{
    IbeaFitnessState state(set, kappa);
    std::vector<double> fitness(set.size(), 0.0);
    for (std::size_t x = 0; x < set.size(); ++x) {
        for (std::size_t y = 0; y < set.size(); ++y) {
            if (y != x) {
                fitness[x] -= state.pressure(y, x);
            }
        }
    }
    return fitness;
}

double igd(std::span<ObjectiveVector const> set, IgdReferenceSet const& refset)
{
    if (set.empty()) {
        throw ContractViolation("IGD of an empty set is undefined");
    }
    for (auto const& z : set) {
        require_same_dimension(z, refset.points().front());
    }
    double total = 0.0;
    for (auto const& r : refset.points()) {
        double best = std::numeric_limits<double>::infinity();
        for (auto const& z : set) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < r.size(); ++k) {
                double const d = r[k] - z[k];
                d2 += d * d;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(refset.size());
}

namespace {

struct Projection {
    double along;
    double across;
};

Projection project(ObjectiveVector const& f, ObjectiveVector const& w, ObjectiveVector const& ideal)
{
    require_same_dimension(f, w);
    require_same_dimension(f, ideal);
    double norm2 = 0.0;
    for (double v : w) {
        norm2 += v * v;
    }
    if (!(norm2 > 0.0)) {
        throw ContractViolation("weight vector must be non-zero");
    }
    double const norm = std::sqrt(norm2);
    double along = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        along += (f[k] - ideal[k]) * w[k] / norm;
    }
    double across2 = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        double const d = (f[k] - ideal[k]) - along * w[k] / norm;
        across2 += d * d;
    }
    return {along, std::sqrt(across2)};
}

} // namespace

double pbi(ObjectiveVector const& f, ObjectiveVector const& w, ObjectiveVector const& ideal, double theta)
{
    require_same_dimension(f, w);
    require_same_dimension(f, ideal);
    double norm2 = 0.0;
    for (double v : w) {
        norm2 += v * v;
    }
    if (!(norm2 > 0.0)) {
        throw ContractViolation("weight vector must be non-zero");
    }
    double const norm = std::sqrt(norm2);
    double d1 = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        d1 += (f[k] - ideal[k]) * w[k] / norm;
    }
    d1 = std::max(0.0, d1);
    double d2sq = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        double const d = (f[k] - ideal[k]) - d1 * w[k] / norm;
        d2sq += d * d;
    }
    return d1 + theta * std::sqrt(d2sq);
}

double perpendicular_distance(ObjectiveVector const& f, ObjectiveVector const& w, ObjectiveVector const& ideal)
{
    return project(f, w, ideal).across;
}

} // namespace archtrunc

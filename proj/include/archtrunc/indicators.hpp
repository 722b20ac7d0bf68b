#pragma once

#include <span>
#include <vector>

#include "archtrunc/core.hpp"
#include "archtrunc/hypervolume.hpp"

namespace archtrunc {

/// Reference front sampled for IGD. Never empty.
class IgdReferenceSet {
public:
    explicit IgdReferenceSet(std::vector<ObjectiveVector> points);

    [[nodiscard]] std::span<ObjectiveVector const> points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

private:
    std::vector<ObjectiveVector> points_;
};

/// Smallest eps such that a shifted down by eps weakly dominates b: max_i (a_i - b_i).
[[nodiscard]] double additive_epsilon(ObjectiveVector const& a, ObjectiveVector const& b);

/// IBEA fitness with objectives rescaled to [0,1] over the set. Lower is worse.
[[nodiscard]] std::vector<double> ibea_fitness(std::span<ObjectiveVector const> set, double kappa);

/// Pairwise indicator state for one IBEA truncation event: the rescaling and
/// the normaliser c are fixed when the event starts.
class IbeaFitnessState {
public:
    IbeaFitnessState(std::span<ObjectiveVector const> set, double kappa);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    /// I(y, x) on the rescaled objectives.
    [[nodiscard]] double indicator(std::size_t y, std::size_t x) const noexcept;
    /// exp(-I(y, x) / (kappa * c)); the fitness term y contributes to x, negated.
    [[nodiscard]] double pressure(std::size_t y, std::size_t x) const noexcept;
    [[nodiscard]] double scale() const noexcept { return c_; }

private:
    std::size_t n_;
    std::size_t m_;
    double kappa_;
    double c_{1.0};
    std::vector<double> scaled_; // row-major n x m
};

/// Mean over reference points of the distance to the nearest set member.
[[nodiscard]] double igd(std::span<ObjectiveVector const> set, IgdReferenceSet const& refset);

/// Penalty-based boundary intersection d1 + theta * d2 with d1 clamped at 0.
[[nodiscard]] double pbi(ObjectiveVector const& f, ObjectiveVector const& w, ObjectiveVector const& ideal, double theta);

/// Distance from f - ideal to the line spanned by w.
[[nodiscard]] double perpendicular_distance(ObjectiveVector const& f, ObjectiveVector const& w, ObjectiveVector const& ideal);

} // namespace archtrunc

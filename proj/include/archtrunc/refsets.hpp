#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archtrunc/core.hpp"

namespace archtrunc {

enum class FrontKind { Simplex, InvertedSimplex };

[[nodiscard]] std::string_view to_string(FrontKind kind) noexcept;
/// Accepts "simplex", "inverted" and "inverted-simplex".
[[nodiscard]] FrontKind parse_front_kind(std::string_view name);

/// Das-Dennis lattice on the unit simplex with H divisions per objective.
struct WeightVectorSet {
    std::vector<ObjectiveVector> vectors;
    std::size_t divisions{};
};

/// Every vector with entries in {0, 1/H, ..., 1} summing to one, first
/// coordinate descending (so (3, 1) yields e1, e2, e3).
[[nodiscard]] WeightVectorSet das_dennis(std::size_t m, std::size_t divisions);

/// z -> 1 - z. Each input must lie on the unit simplex.
[[nodiscard]] std::vector<ObjectiveVector> invert_simplex(std::span<ObjectiveVector const> points);

/// n points uniform on the (inverted) unit simplex via sorted-uniform spacings.
[[nodiscard]] std::vector<ObjectiveVector> sample_front(FrontKind kind, std::size_t n, std::uint64_t seed, std::size_t m = 3);

/// Reference front used by IGD: the Das-Dennis lattice, inverted for the
/// inverted simplex.
[[nodiscard]] std::vector<ObjectiveVector> igd_reference_points(FrontKind kind, std::size_t m = 3, std::size_t divisions = 99);

/// nullopt means "everything in one batch".
using BatchSize = std::optional<std::size_t>;

struct InputSequence {
    FrontKind front_kind{FrontKind::Simplex};
    std::uint64_t base_seed{};
    std::uint64_t shuffle_seed{};
    std::vector<std::vector<Solution>> batches;

    [[nodiscard]] std::size_t total() const noexcept;
    [[nodiscard]] std::vector<Solution> flatten() const;
};

/// Ids are positions in the unshuffled base sample.
[[nodiscard]] InputSequence build_sequence(FrontKind kind, std::size_t n, std::uint64_t base_seed, std::uint64_t shuffle_seed,
                                           BatchSize batch_size, std::size_t m = 3);

/// Same, from an already sampled base set (shared by all shuffles of an experiment).
[[nodiscard]] InputSequence build_sequence(FrontKind kind, std::span<ObjectiveVector const> base, std::uint64_t base_seed,
                                           std::uint64_t shuffle_seed, BatchSize batch_size);

template <typename T>
void fisher_yates(std::vector<T>& items, std::uint64_t seed);

/// CSV `id,f1,...,fm,batch`, rows in arrival order, 17 significant digits.
void write_sequence_csv(std::ostream& out, std::span<std::vector<Solution> const> batches);
void write_sequence_csv(std::filesystem::path const& path, std::span<std::vector<Solution> const> batches);
[[nodiscard]] std::vector<std::vector<Solution>> read_sequence_csv(std::istream& in);
[[nodiscard]] std::vector<std::vector<Solution>> read_sequence_csv(std::filesystem::path const& path);

/// CSV `f1,...,fm`.
void write_points_csv(std::ostream& out, std::span<ObjectiveVector const> points);
[[nodiscard]] std::vector<ObjectiveVector> read_points_csv(std::istream& in);

/// 17 significant digits, enough to round-trip any double.
[[nodiscard]] std::string format_exact(double v);

} // namespace archtrunc

#include "archtrunc/random.hpp"

template <typename T>
void archtrunc::fisher_yates(std::vector<T>& items, std::uint64_t seed)
{
    Rng rng(seed);
    for (std::size_t i = items.size(); i > 1; --i) {
        auto const j = static_cast<std::size_t>(rng.below(i));
        std::swap(items[i - 1], items[j]);
    }
}

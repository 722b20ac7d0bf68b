#include "archtrunc/refsets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "archtrunc/csv.hpp"
#include "archtrunc/random.hpp"

namespace archtrunc {

std::string_view to_string(FrontKind kind) noexcept
{
    switch (kind) {
    case FrontKind::Simplex:
        return "simplex";
    case FrontKind::InvertedSimplex:
        return "inverted";
    }
    return "unknown";
}

FrontKind parse_front_kind(std::string_view name)
{
    if (name == "simplex") {
        return FrontKind::Simplex;
    }
    if (name == "inverted" || name == "inverted-simplex" || name == "inverted_simplex") {
        return FrontKind::InvertedSimplex;
    }
    throw ContractViolation("unknown front kind '" + std::string(name) + "'");
}

namespace {

void das_dennis_fill(std::size_t remaining_dims, std::size_t left, std::size_t divisions, std::vector<double>& prefix,
                     std::vector<ObjectiveVector>& out)
{
    if (remaining_dims == 1) {
        prefix.push_back(static_cast<double>(left) / static_cast<double>(divisions));
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
        prefix.push_back(static_cast<double>(k) / static_cast<double>(divisions));
        das_dennis_fill(remaining_dims - 1, left - k, divisions, prefix, out);
        prefix.pop_back();
    }
}

constexpr double kOnFrontTolerance = 1e-9;

} // namespace

WeightVectorSet das_dennis(std::size_t m, std::size_t divisions)
{
    if (m < 2 || divisions == 0) {
        throw ContractViolation("das_dennis needs m >= 2 and H >= 1");
    }
    WeightVectorSet set{{}, divisions};
    std::vector<double> prefix;
    prefix.reserve(m);
    das_dennis_fill(m, divisions, divisions, prefix, set.vectors);
    return set;
}

std::vector<ObjectiveVector> invert_simplex(std::span<ObjectiveVector const> points)
{
    std::vector<ObjectiveVector> out;
    out.reserve(points.size());
    for (auto const& z : points) {
        double sum = 0.0;
        std::vector<double> inverted(z.size());
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (z[k] < -kOnFrontTolerance) {
                throw ContractViolation("point " + to_string(z) + " has a negative coordinate");
            }
            sum += z[k];
            inverted[k] = 1.0 - z[k];
        }
        if (std::abs(sum - 1.0) > kOnFrontTolerance) {
            throw ContractViolation("point " + to_string(z) + " is not on the unit simplex");
        }
        out.emplace_back(std::move(inverted));
    }
    return out;
}

std::vector<ObjectiveVector> sample_front(FrontKind kind, std::size_t n, std::uint64_t seed, std::size_t m)
{
    if (n == 0 || m < 2) {
        throw ContractViolation("sample_front needs n >= 1 and m >= 2");
    }
    Rng rng(seed);
    std::vector<ObjectiveVector> points;
    points.reserve(n);
    std::vector<double> cuts(m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        cuts.front() = 0.0;
        cuts.back() = 1.0;
        for (std::size_t k = 1; k < m; ++k) {
            cuts[k] = rng.uniform01();
        }
        std::sort(cuts.begin() + 1, cuts.end() - 1);
        std::vector<double> z(m);
        for (std::size_t k = 0; k < m; ++k) {
            z[k] = cuts[k + 1] - cuts[k];
        }
        points.emplace_back(std::move(z));
    }
    if (kind == FrontKind::InvertedSimplex) {
        return invert_simplex(points);
    }
    return points;
}

std::vector<ObjectiveVector> igd_reference_points(FrontKind kind, std::size_t m, std::size_t divisions)
{
    auto lattice = das_dennis(m, divisions).vectors;
    if (kind == FrontKind::InvertedSimplex) {
        return invert_simplex(lattice);
    }
    return lattice;
}

std::size_t InputSequence::total() const noexcept
{
    std::size_t n = 0;
    for (auto const& b : batches) {
        n += b.size();
    }
    return n;
}

std::vector<Solution> InputSequence::flatten() const
{
    std::vector<Solution> out;
    out.reserve(total());
    for (auto const& b : batches) {
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

InputSequence build_sequence(FrontKind kind, std::span<ObjectiveVector const> base, std::uint64_t base_seed,
                             std::uint64_t shuffle_seed, BatchSize batch_size)
{
    if (batch_size && *batch_size == 0) {
        throw ContractViolation("batch size must be positive");
    }
    std::vector<Solution> order;
    order.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        order.push_back({static_cast<SolutionId>(i), base[i]});
    }
    fisher_yates(order, shuffle_seed);

    InputSequence seq{kind, base_seed, shuffle_seed, {}};
    std::size_t const step = batch_size.value_or(std::max<std::size_t>(order.size(), 1));
    for (std::size_t start = 0; start < order.size(); start += step) {
        auto const stop = std::min(order.size(), start + step);
        seq.batches.emplace_back(std::make_move_iterator(order.begin() + static_cast<std::ptrdiff_t>(start)),
                                 std::make_move_iterator(order.begin() + static_cast<std::ptrdiff_t>(stop)));
    }
    return seq;
}

InputSequence build_sequence(FrontKind kind, std::size_t n, std::uint64_t base_seed, std::uint64_t shuffle_seed,
                             BatchSize batch_size, std::size_t m)
{
    auto const base = sample_front(kind, n, base_seed, m);
    return build_sequence(kind, base, base_seed, shuffle_seed, batch_size);
}

std::string format_exact(double v)
{
    char buf[32];
    auto const len = std::snprintf(buf, sizeof buf, "%.17g", v);
    return {buf, static_cast<std::size_t>(len)};
}

void write_sequence_csv(std::ostream& out, std::span<std::vector<Solution> const> batches)
{
    std::size_t m = 0;
    for (auto const& b : batches) {
        if (!b.empty()) {
            m = b.front().objectives.size();
            break;
        }
    }
    out << "id";
    for (std::size_t k = 1; k <= m; ++k) {
        out << ",f" << k;
    }
    out << ",batch\n";
    for (std::size_t t = 0; t < batches.size(); ++t) {
        for (auto const& s : batches[t]) {
            out << s.id;
            for (double v : s.objectives) {
                out << ',' << format_exact(v);
            }
            out << ',' << t << '\n';
        }
    }
}

void write_sequence_csv(std::filesystem::path const& path, std::span<std::vector<Solution> const> batches)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_sequence_csv(out, batches);
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::vector<std::vector<Solution>> read_sequence_csv(std::istream& in)
{
    csv::Reader reader(in);
    auto const& header = reader.header();
    if (header.size() < 4 || header.front() != "id" || header.back() != "batch") {
        throw ContractViolation("sequence file header must be id,f1,...,fm,batch");
    }
    auto const m = header.size() - 2;
    std::vector<std::vector<Solution>> batches;
    std::vector<std::string_view> row;
    while (reader.next(row)) {
        if (row.size() != header.size()) {
            throw ContractViolation("sequence file line " + std::to_string(reader.line()) + ": expected " +
                                    std::to_string(header.size()) + " fields");
        }
        std::vector<double> values(m);
        for (std::size_t k = 0; k < m; ++k) {
            values[k] = csv::parse_double(row[k + 1]);
        }
        auto const id = csv::parse_unsigned(row.front());
        auto const batch = csv::parse_unsigned(row.back());
        if (batch + 1 < batches.size()) {
            throw ContractViolation("sequence file rows must be in arrival order");
        }
        if (batch >= batches.size()) {
            batches.resize(batch + 1);
        }
        batches[batch].push_back({id, ObjectiveVector(std::move(values))});
    }
    return batches;
}

std::vector<std::vector<Solution>> read_sequence_csv(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return read_sequence_csv(in);
}

void write_points_csv(std::ostream& out, std::span<ObjectiveVector const> points)
{
    auto const m = points.empty() ? 0 : points.front().size();
    for (std::size_t k = 1; k <= m; ++k) {
        out << (k > 1 ? "," : "") << 'f' << k;
    }
    out << '\n';
    for (auto const& z : points) {
        for (std::size_t k = 0; k < z.size(); ++k) {
            out << (k ? "," : "") << format_exact(z[k]);
        }
        out << '\n';
    }
}

std::vector<ObjectiveVector> read_points_csv(std::istream& in)
{
    csv::Reader reader(in);
    auto const m = reader.header().size();
    std::vector<ObjectiveVector> points;
    std::vector<std::string_view> row;
    while (reader.next(row)) {
        if (row.size() != m) {
            throw ContractViolation("points file line " + std::to_string(reader.line()) + ": expected " + std::to_string(m) +
                                    " fields");
        }
        std::vector<double> values(m);
        for (std::size_t k = 0; k < m; ++k) {
            values[k] = csv::parse_double(row[k]);
        }
        points.emplace_back(std::move(values));
    }
    return points;
}

} // namespace archtrunc

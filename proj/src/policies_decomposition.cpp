#include <algorithm>
#include <cmath>
#include <limits>

#include "archtrunc/indicators.hpp"
#include "archtrunc/policies.hpp"
#include "archtrunc/random.hpp"
#include "policy_common.hpp"

namespace archtrunc {

namespace {

void require_weights(PolicyContext const& ctx, std::size_t mu, std::size_t m, std::string_view policy)
{
    if (ctx.weights.vectors.size() != mu) {
        throw ContractViolation(std::string(policy) + " needs exactly mu = " + std::to_string(mu) + " weight vectors, got " +
                                std::to_string(ctx.weights.vectors.size()));
    }
    for (auto const& w : ctx.weights.vectors) {
        if (w.size() != m) {
            throw ContractViolation(std::string(policy) + ": weight dimension does not match the objectives");
        }
    }
}

std::vector<double> unit(ObjectiveVector const& w)
{
    double norm2 = 0.0;
    for (double v : w) {
        norm2 += v * v;
    }
    if (!(norm2 > 0.0)) {
        throw ContractViolation("weight vector must be non-zero");
    }
    double const norm = std::sqrt(norm2);
    std::vector<double> out(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        out[k] = w[k] / norm;
    }
    return out;
}

std::vector<double> componentwise_min(std::span<Solution const> set)
{
    std::vector<double> lo(set.front().objectives.begin(), set.front().objectives.end());
    for (auto const& s : set) {
        for (std::size_t k = 0; k < lo.size(); ++k) {
            lo[k] = std::min(lo[k], s.objectives[k]);
        }
    }
    return lo;
}

// Solves a * x = b in place by Gaussian elimination with partial pivoting.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double>& b)
{
    auto const n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(a[pivot][col]) < 1e-12) {
            return false;
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double const f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    for (std::size_t col = n; col-- > 0;) {
        double s = b[col];
        for (std::size_t c = col + 1; c < n; ++c) {
            s -= a[col][c] * b[c];
        }
        b[col] = s / a[col][col];
    }
    return true;
}

} // namespace

std::vector<Solution> truncate_moead(std::span<Solution const> cands, std::size_t mu, PolicyContext const& ctx)
{
    if (cands.empty()) {
        return {};
    }
    auto const m = detail::common_dimension(cands);
    require_weights(ctx, mu, m, "MOEA/D");

    std::vector<double> ideal;
    if (ctx.fixed_ideal) {
        if (ctx.fixed_ideal->size() != m) {
            throw ContractViolation("MOEA/D ideal point dimension does not match the objectives");
        }
        ideal.assign(ctx.fixed_ideal->begin(), ctx.fixed_ideal->end());
    } else {
        ideal = componentwise_min(cands);
    }

    std::vector<bool> incumbent(cands.size(), false);
    std::vector<double> g(m);
    for (auto const& w : ctx.weights.vectors) {
        auto const dir = unit(w);
        std::size_t best = 0;
        double best_value = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < cands.size(); ++i) {
            double d1 = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                g[k] = cands[i].objectives[k] - ideal[k];
                d1 += g[k] * dir[k];
            }
            d1 = std::max(0.0, d1);
            double d2sq = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                double const d = g[k] - d1 * dir[k];
                d2sq += d * d;
            }
            double const value = d1 + ctx.theta * std::sqrt(d2sq);
            if (value < best_value) {
                best_value = value;
                best = i;
            }
        }
        incumbent[best] = true;
    }

    std::vector<Solution> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (incumbent[i]) {
            out.push_back(cands[i]);
        }
    }
    return out;
}

std::vector<Solution> truncate_nsga3(std::span<Solution const> input, std::size_t mu, PolicyContext const& ctx,
                                     TruncationDiagnostics* diagnostics)
{
    if (input.size() <= mu) {
        return {input.begin(), input.end()};
    }
    auto const cands = detail::by_id(input);
    auto const m = detail::common_dimension(cands);
    require_weights(ctx, mu, m, "NSGA-III");

    auto const fronts = nondominated_sort_indices(cands);
    std::vector<std::size_t> kept;
    std::vector<std::size_t> pool; // members of the splitting front
    for (auto const& front : fronts) {
        if (kept.size() + front.size() <= mu) {
            kept.insert(kept.end(), front.begin(), front.end());
            if (kept.size() == mu) {
                return detail::pick(cands, kept);
            }
            continue;
        }
        pool = front;
        break;
    }

    // Normalisation over every member still in play.
    std::vector<std::size_t> considered = kept;
    considered.insert(considered.end(), pool.begin(), pool.end());
    std::vector<double> ideal(m, std::numeric_limits<double>::infinity());
    for (auto i : considered) {
        for (std::size_t k = 0; k < m; ++k) {
            ideal[k] = std::min(ideal[k], cands[i].objectives[k]);
        }
    }
    auto translated = [&](std::size_t i, std::size_t k) { return cands[i].objectives[k] - ideal[k]; };

    std::vector<std::vector<double>> extremes(m, std::vector<double>(m));
    for (std::size_t axis = 0; axis < m; ++axis) {
        std::size_t best = considered.front();
        double best_asf = std::numeric_limits<double>::infinity();
        for (auto i : considered) {
            double asf = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < m; ++k) {
                double const weight = k == axis ? 1.0 : 1e-6;
                asf = std::max(asf, translated(i, k) / weight);
            }
            if (asf < best_asf) {
                best_asf = asf;
                best = i;
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            extremes[axis][k] = translated(best, k);
        }
    }

    std::vector<double> intercepts(m, 1.0);
    std::vector<double> rhs(m, 1.0);
    bool fallback = !solve_linear(extremes, rhs);
    if (!fallback) {
        for (std::size_t k = 0; k < m; ++k) {
            intercepts[k] = 1.0 / rhs[k];
            if (!std::isfinite(intercepts[k]) || !(intercepts[k] > 1e-10)) {
                fallback = true;
            }
        }
    }
    if (fallback) {
        for (std::size_t k = 0; k < m; ++k) {
            double hi = 0.0;
            for (auto i : considered) {
                hi = std::max(hi, translated(i, k));
            }
            intercepts[k] = hi > 0.0 ? hi : 1.0;
        }
    }
    if (diagnostics) {
        std::vector<double> nadir(m);
        for (std::size_t k = 0; k < m; ++k) {
            nadir[k] = ideal[k] + intercepts[k];
        }
        diagnostics->ideal = ObjectiveVector(ideal);
        diagnostics->nadir = ObjectiveVector(std::move(nadir));
        diagnostics->nadir_fallback = fallback;
    }

    // Association to the nearest reference line.
    auto const& refs = ctx.weights.vectors;
    std::vector<std::vector<double>> dirs;
    dirs.reserve(refs.size());
    for (auto const& w : refs) {
        dirs.push_back(unit(w));
    }
    std::vector<std::size_t> niche_of(cands.size(), 0);
    std::vector<double> distance_of(cands.size(), 0.0);
    std::vector<double> f(m);
    for (auto i : considered) {
        for (std::size_t k = 0; k < m; ++k) {
            f[k] = translated(i, k) / intercepts[k];
        }
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_ref = 0;
        for (std::size_t r = 0; r < dirs.size(); ++r) {
            double along = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                along += f[k] * dirs[r][k];
            }
            double d2 = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                double const d = f[k] - along * dirs[r][k];
                d2 += d * d;
            }
            if (d2 < best) {
                best = d2;
                best_ref = r;
            }
        }
        niche_of[i] = best_ref;
        distance_of[i] = std::sqrt(best);
    }

    std::vector<std::size_t> niche_count(refs.size(), 0);
    for (auto i : kept) {
        ++niche_count[niche_of[i]];
    }
    std::vector<std::vector<std::size_t>> associates(refs.size());
    for (auto i : pool) {
        associates[niche_of[i]].push_back(i);
    }
    for (auto& list : associates) {
        std::sort(list.begin(), list.end());
    }

    Rng rng(ctx.niching_seed);
    std::vector<bool> excluded(refs.size(), false);
    std::vector<std::size_t> lowest;
    while (kept.size() < mu) {
        lowest.clear();
        std::size_t min_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < refs.size(); ++r) {
            if (excluded[r]) {
                continue;
            }
            if (niche_count[r] < min_count) {
                min_count = niche_count[r];
                lowest.clear();
            }
            if (niche_count[r] == min_count) {
                lowest.push_back(r);
            }
        }
        auto const r = lowest[rng.below(lowest.size())];
        auto& members = associates[r];
        if (members.empty()) {
            excluded[r] = true;
            continue;
        }
        std::size_t slot = 0;
        if (niche_count[r] == 0) {
            for (std::size_t s = 1; s < members.size(); ++s) {
                if (distance_of[members[s]] < distance_of[members[slot]]) {
                    slot = s;
                }
            }
        } else {
            slot = rng.below(members.size());
        }
        kept.push_back(members[slot]);
        members.erase(members.begin() + static_cast<std::ptrdiff_t>(slot));
        ++niche_count[r];
    }
    return detail::pick(cands, kept);
}

} // namespace archtrunc

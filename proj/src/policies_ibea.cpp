#include "archtrunc/indicators.hpp"
#include "archtrunc/policies.hpp"
#include "policy_common.hpp"

namespace archtrunc {

std::vector<Solution> truncate_ibea(std::span<Solution const> input, std::size_t mu, PolicyContext const& ctx)
{
    if (input.size() <= mu) {
        return {input.begin(), input.end()};
    }
    auto const cands = detail::by_id(input);
    auto const points = objectives_of(cands);
    IbeaFitnessState const state(points, ctx.kappa);

    auto const n = cands.size();
    std::vector<double> fitness(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (y != x) {
                fitness[x] -= state.pressure(y, x);
            }
        }
    }

    std::vector<bool> alive(n, true);
    for (auto remaining = n; remaining > mu; --remaining) {
        std::size_t worst = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (alive[i] && (worst == n || fitness[i] < fitness[worst])) {
                worst = i;
            }
        }
        alive[worst] = false;
        for (std::size_t x = 0; x < n; ++x) {
            if (alive[x]) {
                fitness[x] += state.pressure(worst, x);
            }
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        if (alive[i]) {
            kept.push_back(i);
        }
    }
    return detail::pick(cands, kept);
}

} // namespace archtrunc

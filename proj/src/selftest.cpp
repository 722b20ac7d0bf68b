#include "archtrunc/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "archtrunc/hypervolume.hpp"
#include "archtrunc/oracles.hpp"
#include "archtrunc/policies.hpp"
#include "archtrunc/random.hpp"
#include "archtrunc/stats.hpp"

namespace archtrunc {

namespace {

class Recorder {
public:
    explicit Recorder(SelftestReport& report) : report_(report) { }

    void group(std::string name) { report_.groups.push_back(std::move(name)); }

    void check(bool ok, std::function<std::string()> const& describe)
    {
        ++report_.checks;
        if (!ok) {
            report_.failures.push_back(report_.groups.back() + ": " + describe());
        }
    }

private:
    SelftestReport& report_;
};

std::vector<ObjectiveVector> random_points(Rng& rng, std::size_t n, std::size_t m)
{
    std::vector<ObjectiveVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v(m);
        for (auto& x : v) {
            x = rng.uniform01();
        }
        out.emplace_back(std::move(v));
    }
    return out;
}

std::vector<Solution> as_solutions(std::vector<ObjectiveVector> const& points)
{
    std::vector<Solution> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        out.push_back({i, points[i]});
    }
    return out;
}

std::vector<std::size_t> ids_of(std::vector<Solution> const& set)
{
    std::vector<std::size_t> out;
    for (auto const& s : set) {
        out.push_back(static_cast<std::size_t>(s.id));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void hypervolume_vs_monte_carlo(Recorder& rec, SelftestOptions const& options)
{
    rec.group("hypervolume-vs-monte-carlo");
    Rng rng(mix_seed(options.seed, 1));
    for (std::size_t set_index = 0; set_index < options.monte_carlo_sets; ++set_index) {
        std::size_t const m = set_index % 2 == 0 ? 2 : 3;
        std::size_t const n = 1 + rng.below(20);
        auto const points = random_points(rng, n, m);
        ReferencePoint const ref = HvReferenceRule{}.resolve(as_solutions(points));
        double const exact = hypervolume(points, ref) * options.hv_perturbation;
        auto const mc = oracle::hypervolume_monte_carlo(points, ref, options.monte_carlo_samples, mix_seed(options.seed, 100 + set_index));
        rec.check(std::abs(exact - mc.value) <= 3.0 * mc.standard_error + 1e-12, [&] {
            std::ostringstream os;
            os << "set " << set_index << " (m=" << m << ", n=" << n << "): exact " << exact << " vs MC " << mc.value << " +- "
               << mc.standard_error;
            return os.str();
        });
    }
    // closed-form anchors
    std::vector<ObjectiveVector> one{{0.5, 0.5, 0.5}};
    ReferencePoint const unit{{1.0, 1.0, 1.0}};
    rec.check(std::abs(hypervolume(one, unit) * options.hv_perturbation - 0.125) < 1e-12, [] { return std::string("single box"); });
    std::vector<ObjectiveVector> two{{0.2, 0.6, 0.6}, {0.6, 0.2, 0.6}};
    rec.check(std::abs(hypervolume(two, unit) * options.hv_perturbation - 0.192) < 1e-12, [] { return std::string("two boxes"); });
}

void greedy_vs_exhaustive(Recorder& rec, SelftestOptions const& options)
{
    rec.group("greedy-subset-vs-exhaustive");
    Rng rng(mix_seed(options.seed, 2));
    PolicyContext const ctx;
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t mu = 1; mu <= std::min<std::size_t>(6, n - 1); ++mu) {
            for (int repeat = 0; repeat < 2; ++repeat) {
                // a mutually nondominated set on a random curve plus, on odd
                // repeats, free random points
                std::vector<ObjectiveVector> points;
                for (std::size_t i = 0; i < n; ++i) {
                    double const a = rng.uniform01();
                    if (repeat == 0) {
                        points.push_back(ObjectiveVector{a, 1.0 - a * a});
                    } else {
                        points.push_back(ObjectiveVector{a, rng.uniform01()});
                    }
                }
                auto const cands = as_solutions(points);
                auto const ref = ctx.hv_ref.resolve(cands);
                double const optimum = oracle::best_subset_hypervolume(points, ref, mu);

                auto const removal = ids_of(truncate_sms_removal(cands, mu, ctx));
                auto const removal_oracle = oracle::greedy_removal(points, ref, mu);
                auto const inclusion = ids_of(truncate_hv_inclusion(cands, mu, ctx));
                auto const inclusion_oracle = oracle::greedy_inclusion(points, ref, mu);

                auto const hv_of = [&](std::vector<std::size_t> const& idx) {
                    std::vector<ObjectiveVector> sub;
                    for (auto i : idx) {
                        sub.push_back(points[i]);
                    }
                    return hypervolume(sub, ref);
                };
                auto const where = [&](char const* what) {
                    return std::string(what) + " n=" + std::to_string(n) + " mu=" + std::to_string(mu) + " repeat=" + std::to_string(repeat);
                };
                rec.check(removal == removal_oracle, [&] { return where("removal differs from greedy oracle"); });
                rec.check(inclusion == inclusion_oracle, [&] { return where("inclusion differs from greedy oracle"); });
                rec.check(hv_of(removal) <= optimum * (1 + 1e-12) + 1e-15, [&] { return where("removal exceeds optimum"); });
                rec.check(hv_of(inclusion) <= optimum * (1 + 1e-12) + 1e-15, [&] { return where("inclusion exceeds optimum"); });
            }
        }
    }
}

void wilcoxon_vs_enumeration(Recorder& rec, SelftestOptions const& options)
{
    rec.group("wilcoxon-exact-vs-enumeration");
    Rng rng(mix_seed(options.seed, 3));
    for (std::size_t nx = 1; nx < 12; ++nx) {
        for (std::size_t ny = 1; nx + ny <= 12; ++ny) {
            std::vector<double> x(nx);
            std::vector<double> y(ny);
            // coarse values so that ties occur
            for (auto& v : x) {
                v = static_cast<double>(rng.below(6));
            }
            for (auto& v : y) {
                v = static_cast<double>(rng.below(6)) + 0.5 * static_cast<double>(rng.below(2));
            }
            double const p = wilcoxon_rank_sum(x, y);
            double const expected = oracle::rank_sum_permutation_p(x, y);
            rec.check(std::abs(p - expected) < 1e-9, [&] {
                std::ostringstream os;
                os << "nx=" << nx << " ny=" << ny << ": " << p << " vs " << expected;
                return os.str();
            });
        }
    }
}

void crowding_hand_cases(Recorder& rec)
{
    rec.group("crowding-distance-hand-cases");
    auto const inf = std::numeric_limits<double>::infinity();
    auto const close = [](double a, double b) { return (std::isinf(a) && std::isinf(b)) || std::abs(a - b) < 1e-12; };

    std::vector<Solution> three{{0, {0.0, 1.0}}, {1, {0.5, 0.5}}, {2, {1.0, 0.0}}};
    auto const d3 = crowding_distance(three);
    rec.check(close(d3[0], inf) && close(d3[1], 2.0) && close(d3[2], inf), [] { return std::string("three-point front"); });

    std::vector<Solution> two{{0, {0.0, 1.0}}, {1, {1.0, 0.0}}};
    auto const d2 = crowding_distance(two);
    rec.check(close(d2[0], inf) && close(d2[1], inf), [] { return std::string("two-point front"); });

    std::vector<Solution> five{{0, {0.0, 1.0}}, {1, {0.4, 0.6}}, {2, {0.45, 0.55}}, {3, {0.5, 0.5}}, {4, {1.0, 0.0}}};
    auto const d5 = crowding_distance(five);
    rec.check(close(d5[1], 0.9) && close(d5[2], 0.2) && close(d5[3], 1.1), [] { return std::string("five-point interior values"); });
}

} // namespace

SelftestReport run_selftest(SelftestOptions const& options)
{
    SelftestReport report;
    Recorder rec(report);
    hypervolume_vs_monte_carlo(rec, options);
    greedy_vs_exhaustive(rec, options);
    wilcoxon_vs_enumeration(rec, options);
    crowding_hand_cases(rec);
    return report;
}

} // namespace archtrunc

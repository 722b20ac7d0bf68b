#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "archtrunc/hypervolume.hpp"
#include "archtrunc/indicators.hpp"
#include "archtrunc/policies.hpp"
#include "support.hpp"

using namespace archtrunc;
using Ids = std::vector<SolutionId>;

namespace {

PolicyContext fixed_ref(ObjectiveVector ref)
{
    PolicyContext ctx;
    ctx.hv_ref.fixed = std::move(ref);
    return ctx;
}

// Full recompute of crowding distance after every single removal.
Ids naive_iterative_nsga2(std::vector<Solution> const& cands, std::size_t mu)
{
    auto const fronts = fast_nondominated_sort(cands);
    std::vector<Solution> kept;
    for (auto const& f : fronts) {
        if (kept.size() + f.members.size() <= mu) {
            kept.insert(kept.end(), f.members.begin(), f.members.end());
            continue;
        }
        auto last = f.members;
        while (kept.size() + last.size() > mu) {
            auto const cd = crowding_distance(last);
            std::size_t worst = 0;
            for (std::size_t i = 1; i < last.size(); ++i) {
                if (cd[i] < cd[worst] || (cd[i] == cd[worst] && last[i].id > last[worst].id)) {
                    worst = i;
                }
            }
            last.erase(last.begin() + static_cast<std::ptrdiff_t>(worst));
        }
        kept.insert(kept.end(), last.begin(), last.end());
        break;
    }
    return testing::ids(kept);
}

// Fitness recomputed from scratch each step, normalisation fixed at the start.
Ids naive_ibea(std::vector<Solution> const& cands, std::size_t mu, double kappa)
{
    auto const objs = objectives_of(cands);
    IbeaFitnessState const state(objs, kappa);
    std::vector<std::size_t> alive(cands.size());
    for (std::size_t i = 0; i < alive.size(); ++i) {
        alive[i] = i;
    }
    while (alive.size() > mu) {
        std::size_t worst = 0;
        double worst_f = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < alive.size(); ++a) {
            double f = 0.0;
            for (std::size_t b = 0; b < alive.size(); ++b) {
                if (a != b) {
                    f -= state.pressure(alive[b], alive[a]);
                }
            }
            if (f < worst_f) {
                worst_f = f;
                worst = a;
            }
        }
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(worst));
    }
    Ids out;
    for (auto i : alive) {
        out.push_back(cands[i].id);
    }
    return out;
}

} // namespace

TEST_CASE("policy names round trip")
{
    for (auto p : kAllPolicies) {
        CHECK(parse_policy(to_string(p)) == p);
    }
    CHECK_THROWS_AS((void)parse_policy("spea2"), ContractViolation);
    CHECK(uses_weights(PolicyId::MoeadPbi));
    CHECK(uses_weights(PolicyId::Nsga3));
    CHECK_FALSE(uses_weights(PolicyId::Ibea));
}

TEST_CASE("crowding distance examples")
{
    auto const inf = std::numeric_limits<double>::infinity();
    auto const three = crowding_distance(testing::solutions({{0, 1}, {0.5, 0.5}, {1, 0}}));
    CHECK(three[0] == inf);
    CHECK(three[1] == doctest::Approx(2.0));
    CHECK(three[2] == inf);

    auto const two = crowding_distance(testing::solutions({{0, 1}, {1, 0}}));
    CHECK(two[0] == inf);
    CHECK(two[1] == inf);

    auto const five = crowding_distance(testing::solutions({{0, 1}, {0.4, 0.6}, {0.45, 0.55}, {0.5, 0.5}, {1, 0}}));
    CHECK(five[1] == doctest::Approx(0.9));
    CHECK(five[2] == doctest::Approx(0.2));
    CHECK(five[3] == doctest::Approx(1.1));
}

TEST_CASE("nsga2 one-off examples")
{
    PolicyContext const ctx;
    CHECK(testing::ids(truncate_nsga2_oneoff(testing::solutions({{0, 1}, {0.5, 0.5}, {1, 0}}), 2, ctx)) == Ids{0, 2});
    auto const five = testing::solutions({{0, 1}, {0.1, 0.9}, {0.48, 0.52}, {0.5, 0.5}, {1, 0}});
    CHECK(testing::ids(truncate_nsga2_oneoff(five, 3, ctx)) == Ids{0, 3, 4});
    CHECK(testing::ids(truncate_nsga2_oneoff(testing::solutions({{0, 0}, {1, 1}, {2, 2}}), 1, ctx)) == Ids{0});
    auto const small = testing::solutions({{0, 1}, {1, 0}});
    CHECK(truncate_nsga2_oneoff(small, 5, ctx) == small);
}

TEST_CASE("nsga2 iterative examples")
{
    PolicyContext const ctx;
    auto const five = testing::solutions({{0, 1}, {0.4, 0.6}, {0.45, 0.55}, {0.5, 0.5}, {1, 0}});
    CHECK(testing::ids(truncate_nsga2_iterative(five, 3, ctx)) == Ids{0, 3, 4});

    Rng rng(41);
    auto const front = testing::solutions(testing::random_front(rng, 30, 2));
    auto const kept = truncate_nsga2_iterative(front, 2, ctx);
    double lo = 1, hi = 0;
    for (auto const& s : front) {
        lo = std::min(lo, s.objectives[0]);
        hi = std::max(hi, s.objectives[0]);
    }
    REQUIRE(kept.size() == 2);
    CHECK(std::min(kept[0].objectives[0], kept[1].objectives[0]) == lo);
    CHECK(std::max(kept[0].objectives[0], kept[1].objectives[0]) == hi);
}

TEST_CASE("iterative nsga2 equals a full recompute after each removal")
{
    PolicyContext const ctx;
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t const m = 2 + trial % 2;
        auto const cands = testing::solutions(trial % 4 < 2 ? testing::random_front(rng, 60, m) : testing::random_points(rng, 60, m));
        std::size_t const mu = 5 + rng.below(40);
        CHECK(testing::ids(truncate_nsga2_iterative(cands, mu, ctx)) == naive_iterative_nsga2(cands, mu));
    }
}

TEST_CASE("removing one solution is the same for both nsga2 variants")
{
    PolicyContext const ctx;
    Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        auto const cands = testing::solutions(testing::random_points(rng, 30, 3));
        CHECK(testing::ids(truncate_nsga2_iterative(cands, 29, ctx)) == testing::ids(truncate_nsga2_oneoff(cands, 29, ctx)));
    }
}

TEST_CASE("sms removal examples")
{
    auto const ctx = fixed_ref({2, 2});
    CHECK(testing::ids(truncate_sms_removal(testing::solutions({{0, 1}, {0.5, 0.5}, {1, 0}}), 2, ctx)) == Ids{0, 2});
    auto const dup = testing::solutions({{0.5, 0.5}, {0.5, 0.5}, {0, 1}});
    CHECK(testing::ids(truncate_sms_removal(dup, 2, ctx)) == Ids{1, 2});
}

TEST_CASE("one sms removal drops the least contributor")
{
    PolicyContext const ctx;
    Rng rng(44);
    for (int trial = 0; trial < 50; ++trial) {
        auto const cands = testing::solutions(testing::random_front(rng, 20, 2 + trial % 2));
        auto const ref = ctx.hv_ref.resolve(cands);
        auto const c = hv_contributions(objectives_of(cands), ref);
        auto const worst = static_cast<SolutionId>(std::min_element(c.begin(), c.end()) - c.begin());
        auto const kept = testing::ids(truncate_sms_removal(cands, 19, ctx));
        CHECK(std::find(kept.begin(), kept.end(), worst) == kept.end());
        CHECK(kept.size() == 19);
    }
}

TEST_CASE("hypervolume inclusion examples")
{
    auto const ctx = fixed_ref({2, 2});
    auto const three = testing::solutions({{0, 1}, {0.5, 0.5}, {1, 0}});
    CHECK(testing::ids(truncate_hv_inclusion(three, 2, ctx)) == Ids{0, 1});
    CHECK(testing::ids(truncate_hv_inclusion(three, 1, ctx)) == Ids{1});
    CHECK(testing::ids(truncate_hv_inclusion(three, 3, ctx)) == Ids{0, 1, 2});
}

TEST_CASE("hypervolume policies ignore candidate order")
{
    PolicyContext const ctx;
    Rng rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        auto cands = testing::solutions(testing::random_front(rng, 80, 3));
        auto const a = truncate_sms_removal(cands, 20, ctx);
        auto const b = truncate_hv_inclusion(cands, 20, ctx);
        fisher_yates(cands, 1000 + trial);
        CHECK(truncate_sms_removal(cands, 20, ctx) == a);
        CHECK(truncate_hv_inclusion(cands, 20, ctx) == b);
    }
}

TEST_CASE("ibea examples")
{
    PolicyContext const ctx;
    auto const dup = testing::solutions({{0.5, 0.5}, {0.5, 0.5}, {0, 1}});
    auto const kept = testing::ids(truncate_ibea(dup, 2, ctx));
    REQUIRE(kept.size() == 2);
    CHECK(std::find(kept.begin(), kept.end(), 2) != kept.end());

    // the middle point carries the lowest fitness, see the indicator test
    CHECK(testing::ids(truncate_ibea(testing::solutions({{0, 1}, {0.5, 0.5}, {1, 0}}), 2, ctx)) == Ids{0, 2});
}

TEST_CASE("ibea incremental removal equals recomputation")
{
    PolicyContext const ctx;
    Rng rng(46);
    for (int trial = 0; trial < 40; ++trial) {
        auto const cands = testing::solutions(testing::random_points(rng, 20, 2 + trial % 2));
        std::size_t const mu = 1 + rng.below(19);
        CHECK(testing::ids(truncate_ibea(cands, mu, ctx)) == naive_ibea(cands, mu, ctx.kappa));
    }
}

TEST_CASE("moead example")
{
    PolicyContext ctx;
    ctx.weights.vectors = {{1, 0}, {0, 1}, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}};
    ctx.fixed_ideal = ObjectiveVector{0, 0};
    auto const cands = testing::solutions({{0.2, 0.8}, {0.8, 0.2}, {0.5, 0.5}});
    CHECK(testing::ids(truncate_moead(cands, 3, ctx)) == Ids{0, 1, 2});
    CHECK(pbi({0.8, 0.2}, {1, 0}, {0, 0}, 5) == doctest::Approx(1.8));
    CHECK(pbi({0.5, 0.5}, {1, 1}, {0, 0}, 5) == doctest::Approx(0.70711).epsilon(1e-4));

    ctx.weights.vectors.pop_back();
    CHECK_THROWS_AS((void)truncate_moead(cands, 3, ctx), ContractViolation);
}

TEST_CASE("moead keeps one incumbent per ray for on-ray candidates")
{
    PolicyContext ctx;
    ctx.weights = das_dennis(3, 4);
    ctx.fixed_ideal = ObjectiveVector{0, 0, 0};
    std::vector<ObjectiveVector> pts;
    for (auto const& w : ctx.weights.vectors) {
        pts.push_back(w);
        pts.push_back({2 * w[0], 2 * w[1], 2 * w[2]});
    }
    auto const kept = truncate_moead(testing::solutions(pts), ctx.weights.vectors.size(), ctx);
    CHECK(kept.size() == ctx.weights.vectors.size());
    for (auto const& s : kept) {
        CHECK(s.id % 2 == 0);
    }
}

TEST_CASE("moead with a fixed ideal ignores candidate order")
{
    PolicyContext ctx;
    ctx.weights = das_dennis(3, 4);
    ctx.fixed_ideal = ObjectiveVector{0, 0, 0};
    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        auto cands = testing::solutions(testing::random_points(rng, 60, 3));
        auto const a = testing::ids(truncate_moead(cands, 15, ctx));
        fisher_yates(cands, 500 + trial);
        CHECK(testing::ids(truncate_moead(cands, 15, ctx)) == a);
    }
}

TEST_CASE("nsga3 picks on-ray candidates for every seed")
{
    PolicyContext ctx;
    ctx.weights = das_dennis(3, 2);
    std::vector<ObjectiveVector> pts(ctx.weights.vectors.begin(), ctx.weights.vectors.end());
    pts.push_back({0.3, 0.3, 0.4});
    pts.push_back({0.6, 0.3, 0.1});
    pts.push_back({0.1, 0.2, 0.7});
    auto const cands = testing::solutions(pts);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ctx.niching_seed = seed;
        CHECK(testing::ids(truncate_nsga3(cands, 6, ctx)) == Ids{0, 1, 2, 3, 4, 5});
    }
}

TEST_CASE("nsga3 serves the empty niche before a crowded one")
{
    PolicyContext ctx;
    ctx.weights = das_dennis(2, 2); // (1,0), (0.5,0.5), (0,1)
    auto const cands = testing::solutions({{0, 1}, {1, 0}, {0.9, 0.1}, {0.45, 0.55}});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ctx.niching_seed = seed;
        CHECK(testing::ids(truncate_nsga3(cands, 3, ctx)) == Ids{0, 1, 3});
    }
}

TEST_CASE("nsga3 falls back on degenerate normalisation")
{
    PolicyContext ctx;
    ctx.weights = das_dennis(3, 2);
    std::vector<ObjectiveVector> pts;
    for (int i = 0; i <= 10; ++i) {
        double const x = i / 10.0;
        pts.push_back({x, 1 - x, 0.5});
    }
    TruncationDiagnostics diag;
    auto const kept = truncate_nsga3(testing::solutions(pts), 6, ctx, &diag);
    CHECK(kept.size() == 6);
    CHECK(diag.nadir_fallback);
    REQUIRE(diag.ideal.has_value());
    CHECK((*diag.ideal)[2] == 0.5);
}

TEST_CASE("nsga3 prefers better fronts")
{
    PolicyContext ctx;
    ctx.weights = das_dennis(2, 2);
    auto const cands = testing::solutions({{0, 1}, {1, 0}, {0.5, 0.5}, {2, 2}, {3, 3}});
    CHECK(testing::ids(truncate_nsga3(cands, 3, ctx)) == Ids{0, 1, 2});
}

TEST_CASE("generic dispatch")
{
    PolicyContext ctx;
    ctx.weights = das_dennis(2, 2);
    ctx.fixed_ideal = ObjectiveVector{0, 0};
    auto const cands = testing::solutions({{0, 1}, {0.5, 0.5}, {1, 0}, {2, 2}});
    for (auto p : kAllPolicies) {
        auto const kept = truncate(p, cands, 3, ctx);
        CHECK(kept.size() <= 3);
        CHECK_THROWS_AS((void)truncate(p, cands, 0, ctx), ContractViolation);
    }
    auto dup_ids = cands;
    dup_ids[1].id = 0;
    CHECK_THROWS_AS((void)truncate(PolicyId::SmsRemoval, dup_ids, 2, ctx), ContractViolation);

    ctx.dominance_prefilter = true;
    CHECK(testing::ids(truncate(PolicyId::Ibea, cands, 3, ctx)) == Ids{0, 1, 2});
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "support.hpp"

using namespace archtrunc;

TEST_CASE("objective vectors reject short or non-finite input")
{
    CHECK_THROWS_AS(ObjectiveVector({1.0}), ContractViolation);
    CHECK_THROWS_AS(ObjectiveVector({1.0, std::numeric_limits<double>::quiet_NaN()}), ContractViolation);
    CHECK_THROWS_AS(ObjectiveVector({1.0, std::numeric_limits<double>::infinity()}), ContractViolation);
    ObjectiveVector const v{1.0, 2.0, 3.0};
    CHECK(v.size() == 3);
    CHECK(v[2] == 3.0);
}

TEST_CASE("dominance examples")
{
    CHECK(dominates({1, 2, 3}, {2, 2, 3}));
    CHECK_FALSE(dominates({1, 2, 3}, {1, 2, 3}));
    CHECK_FALSE(dominates({0, 1}, {1, 0}));
    CHECK_FALSE(dominates({1, 0}, {0, 1}));
    CHECK_THROWS_AS((void)dominates({0, 1}, {0, 1, 2}), ContractViolation);
}

TEST_CASE("dominance is irreflexive, antisymmetric and transitive on random triples")
{
    Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        // coarse grid so that dominance and equality both occur often
        auto coarse = [&] {
            return ObjectiveVector{double(rng.below(3)), double(rng.below(3)), double(rng.below(3))};
        };
        auto const a = coarse();
        auto const b = coarse();
        auto const c = coarse();
        CHECK_FALSE(dominates(a, a));
        CHECK_FALSE((dominates(a, b) && dominates(b, a)));
        if (dominates(a, b) && dominates(b, c)) {
            CHECK(dominates(a, c));
        }
    }
}

TEST_CASE("nondominated filter examples")
{
    CHECK(nondominated_filter({}).empty());

    auto const a = testing::solutions({{0, 1}, {1, 0}, {1, 1}});
    CHECK(testing::ids(nondominated_filter(a)) == std::vector<SolutionId>{0, 1});

    auto const b = testing::solutions({{0, 1}, {1, 0}});
    CHECK(nondominated_filter(b).size() == 2);

    auto const c = testing::solutions({{1, 2, 3}, {2, 3, 4}, {3, 1, 2}});
    CHECK(testing::ids(nondominated_filter(c)) == std::vector<SolutionId>{0, 2});

    auto const dup = testing::solutions({{0.5, 0.5}, {0.5, 0.5}, {1, 1}});
    CHECK(nondominated_filter(dup).size() == 2);
}

TEST_CASE("nondominated sort examples")
{
    auto const one = fast_nondominated_sort(testing::solutions({{0, 1}, {1, 0}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].members.size() == 2);

    auto const chain = fast_nondominated_sort(testing::solutions({{0, 0}, {1, 1}, {2, 2}}));
    REQUIRE(chain.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        CHECK(chain[r].rank == r);
        REQUIRE(chain[r].members.size() == 1);
        CHECK(chain[r].members[0].id == r);
    }

    auto const mixed = fast_nondominated_sort(testing::solutions({{0, 1}, {1, 0}, {1, 1}, {2, 2}}));
    REQUIRE(mixed.size() == 3);
    CHECK(testing::ids(mixed[0].members) == std::vector<SolutionId>{0, 1});
    CHECK(testing::ids(mixed[1].members) == std::vector<SolutionId>{2});
    CHECK(testing::ids(mixed[2].members) == std::vector<SolutionId>{3});
}

TEST_CASE("nondominated sort agrees with brute-force dominance depth")
{
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto const set = testing::solutions(testing::random_points(rng, 40, 3));
        // depth(i) = 0 if nothing dominates i, else 1 + max depth of its dominators
        std::vector<int> depth(set.size(), -1);
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < set.size(); ++i) {
                int d = 0;
                bool known = true;
                for (std::size_t j = 0; j < set.size(); ++j) {
                    if (dominates(set[j].objectives, set[i].objectives)) {
                        if (depth[j] < 0) {
                            known = false;
                        } else {
                            d = std::max(d, depth[j] + 1);
                        }
                    }
                }
                if (known && depth[i] != d) {
                    depth[i] = d;
                    changed = true;
                }
            }
        }
        auto const fronts = nondominated_sort_indices(set);
        std::size_t seen = 0;
        for (std::size_t r = 0; r < fronts.size(); ++r) {
            for (auto i : fronts[r]) {
                CHECK(depth[i] == static_cast<int>(r));
                ++seen;
            }
        }
        CHECK(seen == set.size());
    }
}

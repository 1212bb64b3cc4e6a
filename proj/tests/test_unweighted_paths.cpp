#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdg/path_table.hpp"
#include "cdg/search.hpp"
#include "cdg/unweighted_paths.hpp"
#include "support.hpp"

using namespace cdg;

TEST_CASE("case table examples") {
    const auto five = admissible_range_unweighted(5, 2);
    CHECK(five.lo == 1);
    CHECK(five.hi == 2);
    const auto three = admissible_range_unweighted(3, 1);
    CHECK(three.lo == 1);
    CHECK(three.hi == 3);
    CHECK_THROWS_AS(admissible_range_unweighted(4, 0), std::invalid_argument);
}

TEST_CASE("ten-vertex path at t = 2 against brute force") {
    const auto range = admissible_range_unweighted(10, 2);
    const std::vector<long long> w(10, 1);
    for (int kappa = 1; kappa <= 7; ++kappa) {
        INFO("kappa ", kappa);
        const bool expected = oracle::admits(oracle::path_equilibria(w, kappa), 2);
        CHECK(range.contains(kappa) == expected);
        CHECK(admits_by_inequalities(10, 2, kappa) == expected);
    }
}

TEST_CASE("closed forms agree with each other and with the weighted table") {
    for (int n = 1; n <= 16; ++n)
        for (int t = 1; t <= 8; ++t) {
            const auto range = admissible_range_unweighted(n, t);
            const auto table = admissible_counts_weighted(std::vector<Weight>(n, 1), t, 2 * n);
            for (int kappa = 1; kappa <= 2 * n; ++kappa) {
                INFO("n ", n, " t ", t, " kappa ", kappa);
                const bool in_table = std::binary_search(table.begin(), table.end(), kappa);
                CHECK(admits_by_inequalities(n, t, kappa) == in_table);
                CHECK(range.contains(kappa) == in_table);
            }
        }
}

TEST_CASE("closed forms against the oracle on small paths") {
    for (int n = 1; n <= 7; ++n) {
        const std::vector<long long> w(n, 1);
        for (int kappa = 1; kappa <= std::min(2 * n, 6); ++kappa) {
            const auto eq = oracle::path_equilibria(w, kappa);
            for (int t = 1; t <= 5; ++t) {
                INFO("n ", n, " t ", t, " kappa ", kappa);
                CHECK(admits_by_inequalities(n, t, kappa) == oracle::admits(eq, t));
                CHECK(admissible_range_unweighted(n, t).contains(kappa) == oracle::admits(eq, t));
            }
        }
    }
}

TEST_CASE("constructed profiles exist exactly when the count is admissible") {
    for (int n = 1; n <= 30; ++n)
        for (int t = 1; t <= 8; ++t) {
            const auto range = admissible_range_unweighted(n, t);
            for (int kappa = 1; kappa <= n + 2; ++kappa) {
                INFO("n ", n, " t ", t, " kappa ", kappa);
                const auto profile = unweighted_path_profile(n, t, kappa);
                CHECK(profile.has_value() == range.contains(kappa));
                if (!profile || n > 14) continue;
                const std::vector<long long> w(n, 1);
                const auto adj = oracle::path_adjacency(n);
                CHECK(oracle::is_nash(adj, w, *profile));
                long long mu = oracle::kInfinity;
                for (long long u : oracle::simulate(adj, w, *profile).utility) mu = std::min(mu, u);
                long long nu = 0;
                auto plus = *profile;
                plus.push_back(0);
                for (int v = 0; v < n; ++v) {
                    plus.back() = v;
                    nu = std::max(nu, oracle::simulate(adj, w, plus).utility.back());
                }
                CHECK(nu <= t);
                CHECK(t <= mu);
            }
        }
}

TEST_CASE("unweighted forest solver") {
    SUBCASE("seven-vertex path, two players") {
        const auto forest = PathForest::from_weights({std::vector<Weight>(7, 1)});
        const auto sol = solve_forest_unweighted(forest, 2);
        REQUIRE(sol);
        CHECK(sol->witness.t == 3);
    }
    SUBCASE("six-vertex path, three players") {
        const auto forest = PathForest::from_weights({std::vector<Weight>(6, 1)});
        const bool exists = brute_force({forest.to_graph(), 3}).found.has_value();
        CHECK(solve_forest_unweighted(forest, 3).has_value() == exists);
    }
    SUBCASE("paths of five and three, four players") {
        const auto forest = PathForest::from_weights({std::vector<Weight>(5, 1), std::vector<Weight>(3, 1)});
        const auto sol = solve_forest_unweighted(forest, 4);
        CHECK(sol.has_value() == brute_force({forest.to_graph(), 4}).found.has_value());
    }
    SUBCASE("more players than vertices") {
        const auto forest = PathForest::from_weights({std::vector<Weight>(2, 1), std::vector<Weight>(1, 1)});
        const auto sol = solve_forest_unweighted(forest, 5);
        REQUIRE(sol);
        const GameInstance inst{forest.to_graph(), 5};
        CHECK(is_nash(inst, sol->profile).equilibrium());
    }
    SUBCASE("weights other than one are refused") {
        const auto forest = PathForest::from_weights({{1, 2}});
        CHECK_THROWS_AS(solve_forest_unweighted(forest, 1), std::invalid_argument);
    }
}

TEST_CASE("unweighted forests against brute force") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<std::vector<Weight>> weights;
        int total = 0;
        const int paths = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < paths && total < 9; ++j) {
            const int len = 1 + static_cast<int>(rng() % std::min(6, 9 - total));
            weights.emplace_back(len, 1);
            total += len;
        }
        const auto forest = PathForest::from_weights(weights);
        const int k = 1 + static_cast<int>(rng() % 4);
        const auto sol = solve_forest_unweighted(forest, k);
        const GameInstance inst{forest.to_graph(), k};
        INFO("trial ", trial);
        CHECK(sol.has_value() == brute_force(inst).found.has_value());
        if (sol) CHECK(oracle::is_nash(testing_support::adjacency_of(inst.graph),
                                       testing_support::weights_of(inst.graph), sol->profile));
    }
}

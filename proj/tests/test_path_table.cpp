#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdg/path_table.hpp"
#include "support.hpp"

using namespace cdg;

namespace {

using Equilibria = std::set<std::pair<long long, long long>>;

bool oracle_accepts(const Equilibria& eq, Weight nu_max, Weight mu_min) {
    for (const auto& [nu, mu] : eq)
        if (nu <= nu_max && mu >= mu_min) return true;
    return false;
}

// ν and μ of a concrete profile, straight from the naive simulator.
std::pair<long long, long long> measure(const std::vector<long long>& w, const std::vector<int>& seeds) {
    const auto adj = oracle::path_adjacency(static_cast<int>(w.size()));
    long long mu = oracle::kInfinity;
    for (long long u : oracle::simulate(adj, w, seeds).utility) mu = std::min(mu, u);
    long long nu = std::numeric_limits<long long>::min();
    auto plus = seeds;
    plus.push_back(0);
    for (int v = 0; v < static_cast<int>(w.size()); ++v) {
        plus.back() = v;
        nu = std::max(nu, oracle::simulate(adj, w, plus).utility.back());
    }
    return {nu, mu};
}

void check_table(const std::vector<long long>& w, Weight nu_max, Weight mu_min, int max_players,
                 const std::vector<Equilibria>& eq) {
    const PathGeometry geometry(std::vector<Weight>(w.begin(), w.end()));
    const SubEquilibriumTable table(geometry, nu_max, mu_min, max_players);
    const auto adj = oracle::path_adjacency(static_cast<int>(w.size()));
    for (int kappa = 0; kappa <= max_players; ++kappa) {
        const bool expected = oracle_accepts(eq[kappa], nu_max, mu_min);
        INFO("w size ", w.size(), " kappa ", kappa, " nu_max ", nu_max, " mu_min ", mu_min);
        CHECK(table.admits(kappa) == expected);
        if (!table.admits(kappa)) continue;
        const auto positions = table.reconstruct(kappa);
        REQUIRE(static_cast<int>(positions.size()) == kappa);
        CHECK(oracle::is_nash(adj, w, positions));
        const auto [nu, mu] = measure(w, positions);
        CHECK(nu <= nu_max);
        CHECK(mu >= mu_min);
    }
}

}  // namespace

TEST_CASE("unit path of five vertices at t = 2") {
    const std::vector<Weight> w(5, 1);
    const auto counts = admissible_counts_weighted(w, 2, 4);
    CHECK(counts == std::vector<int>{1, 2});
}

TEST_CASE("single vertex of weight 7 at t = 7") {
    const std::vector<Weight> w{7};
    const auto counts = admissible_counts_weighted(w, 7, 2);
    CHECK(counts == std::vector<int>{0, 1});
}

TEST_CASE("weighted path 3, -1, 3 at t = 3 against the oracle") {
    const std::vector<long long> w{3, -1, 3};
    std::vector<int> expected;
    for (int kappa = 0; kappa <= 6; ++kappa)
        if (oracle::admits(oracle::path_equilibria(w, kappa), 3)) expected.push_back(kappa);
    const std::vector<Weight> ww(w.begin(), w.end());
    CHECK(admissible_counts_weighted(ww, 3) == expected);
}

TEST_CASE("closed-form utilities match the simulator") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto w = testing_support::random_weights(rng, n, -3, 4);
        const PathGeometry g(w);
        const std::vector<long long> lw(w.begin(), w.end());
        const auto adj = oracle::path_adjacency(n);
        // a lone player at v between stacks/singles at l and r
        const int l = static_cast<int>(rng() % (n + 1));
        const int r = l + 1 + static_cast<int>(rng() % (n + 1 - l));
        const int lc = l == 0 ? 0 : 1 + static_cast<int>(rng() % 2);
        const int rc = r == n + 1 ? 0 : 1 + static_cast<int>(rng() % 2);
        std::vector<int> seeds;
        for (int i = 0; i < lc; ++i) seeds.push_back(l - 1);
        for (int i = 0; i < rc; ++i) seeds.push_back(r - 1);
        Weight best = std::numeric_limits<Weight>::min();
        for (int v = std::max(l, 1); v <= std::min(r, n); ++v) {
            auto with = seeds;
            with.push_back(v - 1);
            const auto u = oracle::simulate(adj, lw, with).utility.back();
            CHECK(g.lone(v, l, lc, r, rc) == u);
            best = std::max<Weight>(best, u);
        }
        CHECK(g.extra(l, lc, r, rc) == best);
    }
}

TEST_CASE("both readings of the empty profile coincide") {
    // "Σw ≤ t" and "no lone extra player earns more than t" are the same test.
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto w = testing_support::random_weights(rng, n, -4, 3);
        const PathGeometry g(w);
        Weight sum = 0;
        for (auto x : w) sum += x;
        CHECK(g.extra(0, 0, n + 1, 0) == sum);
    }
}

TEST_CASE("boundary table matches the oracle on small weighted paths") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto w = testing_support::random_weights(rng, n, -3, 3);
        const std::vector<long long> lw(w.begin(), w.end());
        const int max_players = std::min(2 * n, 6);
        std::vector<Equilibria> eq;
        for (int kappa = 0; kappa <= max_players; ++kappa) eq.push_back(oracle::path_equilibria(lw, kappa));
        Weight total_pos = 0;
        for (auto x : w) total_pos += std::max<Weight>(x, 0);
        for (Weight t = -2; t <= total_pos + 1; ++t) check_table(lw, t, t, max_players, eq);
    }
}

TEST_CASE("split thresholds match the oracle") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const auto w = testing_support::random_weights(rng, n, -3, 3);
        const std::vector<long long> lw(w.begin(), w.end());
        const int max_players = std::min(2 * n, 5);
        std::vector<Equilibria> eq;
        for (int kappa = 0; kappa <= max_players; ++kappa) eq.push_back(oracle::path_equilibria(lw, kappa));
        for (Weight mu_min = -3; mu_min <= 5; ++mu_min)
            for (Weight nu_max = mu_min; nu_max <= 6; ++nu_max) check_table(lw, nu_max, mu_min, max_players, eq);
    }
}

TEST_CASE("reconstruct rejects counts that are not admitted") {
    const PathGeometry g(std::vector<Weight>(5, 1));
    const SubEquilibriumTable table(g, 2, 2, 4);
    CHECK_THROWS_AS((void)table.reconstruct(4), std::invalid_argument);
    CHECK(table.cell(1, 3, 1, 0, 0));
}

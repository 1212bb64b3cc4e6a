#pragma once

#include <map>
#include <span>
#include <tuple>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cdg/graph.hpp"

namespace cdg {

/// Closed-form territory arithmetic on a single weighted path v_1..v_n.
///
/// Positions are 1-based; 0 stands for "nothing to the left" and n+1 for
/// "nothing to the right". A count class is min(count, 3): the utilities
/// only distinguish a single occupant from a stack, and a mover leaving a
/// stack of two turns it into a single.
class PathGeometry {
public:
    explicit PathGeometry(std::vector<Weight> weights);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] Weight weight(int v) const { return w_[v]; }
    [[nodiscard]] Weight segment(int lo, int hi) const { return lo > hi ? 0 : prefix_[hi] - prefix_[lo - 1]; }
    [[nodiscard]] Weight total() const { return prefix_[n_]; }
    /// Sum of positive weights.
    [[nodiscard]] Weight positive_total() const { return positive_; }

    /// Utility of a lone player on v with nearest occupied positions l < v < r
    /// holding lc and rc players.
    [[nodiscard]] Weight lone(int v, int l, int lc, int r, int rc) const;

    /// Utility of each of the pc players on p (0 when stacked).
    [[nodiscard]] Weight resident(int p, int pc, int l, int lc, int r, int rc) const {
        return pc >= 2 ? 0 : lone(p, l, lc, r, rc);
    }

    /// Best utility of an extra player choosing a vertex in [l, r] while l and r
    /// are occupied by lc and rc players (occupied endpoints give 0).
    [[nodiscard]] Weight extra(int l, int lc, int r, int rc) const;

private:
    int n_;
    std::vector<Weight> w_;
    std::vector<Weight> prefix_;
    Weight positive_ = 0;
    mutable std::vector<Weight> extra_;
};

inline int count_class(int count) { return count < 3 ? count : 3; }

/// Dynamic program over Nash sub-equilibria of one path.
///
/// A profile is accepted when it is a Nash equilibrium of the path game,
/// every resident earns at least mu_min and no extra player could earn more
/// than nu_max. With nu_max <= mu_min this is the boundary table f_t with
/// t = nu_max = mu_min. With nu_max > mu_min each cell additionally carries
/// (pu, pe): the smallest resident utility strictly left of y (capped at
/// nu_max) and the best extra-player value on segments ending at y (floored
/// at mu_min), so that cross-checks between residents and far-away extra
/// players stay exact.
class SubEquilibriumTable {
public:
    SubEquilibriumTable(const PathGeometry& path, Weight nu_max, Weight mu_min, int max_players);

    [[nodiscard]] int max_players() const { return max_players_; }

    /// f(κ, (x, a), (y, b)) with 1-based x and the dummy y = 0.
    [[nodiscard]] bool cell(int kappa, int x, int a, int y, int b) const;

    [[nodiscard]] bool admits(int kappa) const;

    /// Sorted κ values, 0 included when admitted.
    [[nodiscard]] std::vector<int> admissible() const;

    /// Sorted 0-based positions of an accepted κ-player profile.
    /// Throws std::invalid_argument when κ is not admitted.
    [[nodiscard]] std::vector<int> reconstruct(int kappa) const;

private:
    using Bits = boost::dynamic_bitset<>;
    struct Entry {
        Weight pu;
        Weight pe;
        Bits kappas;
    };
    using Key = std::tuple<int, int, int>;  // (a, y, b)

    struct Step {
        bool ok = false;
        Weight pu = 0;
        Weight pe = 0;
    };

    [[nodiscard]] bool init_ok(int x, int a) const;
    [[nodiscard]] Step transition(int z, int c, int y, int b, int x, int a, Weight pu, Weight pe) const;
    [[nodiscard]] bool final_ok(int x, int a, int y, int b, Weight pu, Weight pe) const;
    void add(int x, const Key& key, Weight pu, Weight pe, const Bits& kappas);
    [[nodiscard]] const std::vector<Entry>* find(int x, int a, int y, int b) const;
    void trace(int x, int a, int y, int b, const Entry& entry, int kappa, std::vector<int>& out) const;

    const PathGeometry& path_;
    Weight nu_max_;
    Weight mu_min_;
    int max_players_;
    std::vector<std::map<Key, std::vector<Entry>>> layers_;
    Bits admitted_;
};

/// κ values in 0..max_players for which the path has a Nash equilibrium with
/// ν ≤ t ≤ μ. max_players < 0 means 2n.
std::vector<int> admissible_counts_weighted(std::span<const Weight> weights, Weight t, int max_players = -1);

}  // namespace cdg

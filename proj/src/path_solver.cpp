#include "cdg/path_solver.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "cdg/path_table.hpp"

namespace cdg {

PathForest PathForest::from_graph(const WeightedGraph& graph) {
    for (Vertex v = 0; v < graph.size(); ++v)
        if (graph.degree(v) > 2)
            throw NotAPathForest("vertex " + std::to_string(v) + " has degree " + std::to_string(graph.degree(v)) +
                                     "; every vertex of a path forest has degree at most 2",
                                 v);
    PathForest forest;
    for (const auto& component : graph.components()) {
        std::int64_t degree_sum = 0;
        for (Vertex v : component) degree_sum += graph.degree(v);
        if (degree_sum / 2 != static_cast<std::int64_t>(component.size()) - 1)
            throw NotAPathForest("vertex " + std::to_string(component.front()) + " lies on a cycle", component.front());
        Vertex start = component.front();
        for (Vertex v : component)
            if (graph.degree(v) <= 1) {
                start = v;
                break;
            }
        std::vector<Vertex> path{start};
        Vertex prev = -1, cur = start;
        while (true) {
            Vertex next = -1;
            for (Vertex nb : graph.neighbors(cur))
                if (nb != prev) next = nb;
            if (next < 0) break;
            prev = cur;
            cur = next;
            path.push_back(cur);
        }
        std::vector<Weight> w;
        for (Vertex v : path) w.push_back(graph.weight(v));
        forest.paths.push_back(std::move(path));
        forest.weights.push_back(std::move(w));
    }
    return forest;
}

PathForest PathForest::from_weights(std::vector<std::vector<Weight>> weights) {
    PathForest forest;
    Vertex next = 0;
    for (const auto& w : weights) {
        std::vector<Vertex> ids(w.size());
        for (auto& id : ids) id = next++;
        forest.paths.push_back(std::move(ids));
    }
    forest.weights = std::move(weights);
    return forest;
}

int PathForest::vertex_count() const {
    int n = 0;
    for (const auto& p : paths) n += static_cast<int>(p.size());
    return n;
}

Weight PathForest::positive_total(int j) const {
    Weight sum = 0;
    for (Weight w : weights[j]) sum += std::max<Weight>(w, 0);
    return sum;
}

Weight PathForest::utility_bound() const {
    Weight best = 0;
    for (int j = 0; j < path_count(); ++j) best = std::max(best, positive_total(j));
    return best;
}

WeightedGraph PathForest::to_graph() const {
    const int n = vertex_count();
    std::vector<Weight> w(n, 0);
    std::vector<Edge> edges;
    for (int j = 0; j < path_count(); ++j)
        for (std::size_t i = 0; i < paths[j].size(); ++i) {
            w[paths[j][i]] = weights[j][i];
            if (i > 0) edges.emplace_back(paths[j][i - 1], paths[j][i]);
        }
    return WeightedGraph::from_edges(std::move(w), edges);
}

std::optional<std::vector<int>> combine_counts(std::span<const std::vector<int>> sets, int k) {
    if (k < 0) return std::nullopt;
    const int m = static_cast<int>(sets.size());
    // reach[j][s]: the sets j..m-1 can contribute exactly s.
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(k + 1, 0));
    reach[m][0] = 1;
    for (int j = m - 1; j >= 0; --j)
        for (int s = 0; s <= k; ++s)
            for (int kappa : sets[j]) {
                if (kappa > s) break;
                if (reach[j + 1][s - kappa]) {
                    reach[j][s] = 1;
                    break;
                }
            }
    if (!reach[0][k]) return std::nullopt;
    std::vector<int> pick;
    int left = k;
    for (int j = 0; j < m; ++j)
        for (int kappa : sets[j])
            if (kappa <= left && reach[j + 1][left - kappa]) {
                pick.push_back(kappa);
                left -= kappa;
                break;
            }
    return pick;
}

StrategyProfile assemble_profile(const PathForest& forest, const std::vector<std::vector<int>>& positions) {
    StrategyProfile profile;
    for (int j = 0; j < forest.path_count(); ++j)
        for (int pos : positions[j]) profile.push_back(forest.paths[j][pos]);
    return profile;
}

namespace {

class ForestSweep {
public:
    ForestSweep(const PathForest& forest, int k) : forest_(forest), k_(k) {
        for (const auto& w : forest.weights) geometry_.emplace_back(w);
    }

    const std::vector<int>& counts(int j, Weight nu_max, Weight mu_min) {
        auto key = std::make_tuple(j, nu_max, mu_min);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, SubEquilibriumTable(geometry_[j], nu_max, mu_min, k_).admissible()).first;
        return it->second;
    }

    std::optional<std::vector<int>> combine(Weight nu_max, Weight mu_min, int exceptional = -1,
                                            Weight exc_nu = 0, Weight exc_mu = 0) {
        std::vector<std::vector<int>> sets;
        for (int j = 0; j < forest_.path_count(); ++j)
            sets.push_back(j == exceptional ? counts(j, exc_nu, exc_mu) : counts(j, nu_max, mu_min));
        return combine_counts(sets, k_);
    }

    ForestSolution build(BoundaryWitness witness) {
        const WeightedGraph graph = forest_.to_graph();
        for (int j = 0; j < forest_.path_count(); ++j) {
            const bool exc = witness.exceptional == j;
            const Weight nu = exc ? witness.upper : witness.t;
            const Weight mu = exc ? witness.t : witness.upper;
            witness.positions.push_back(SubEquilibriumTable(geometry_[j], nu, mu, k_).reconstruct(witness.counts[j]));
        }
        ForestSolution solution{witness, assemble_profile(forest_, witness.positions)};
        if (!is_nash(GameInstance{graph, k_}, solution.profile).equilibrium())
            throw std::logic_error("assembled path-forest profile is not a Nash equilibrium");
        return solution;
    }

private:
    const PathForest& forest_;
    int k_;
    std::vector<PathGeometry> geometry_;
    std::map<std::tuple<int, Weight, Weight>, std::vector<int>> cache_;
};

}  // namespace

std::optional<ForestSolution> solve_forest_weighted(const PathForest& forest, int k) {
    if (k < 1 || forest.vertex_count() == 0) return std::nullopt;
    const int m = forest.path_count();
    const Weight W = forest.utility_bound();
    ForestSweep sweep(forest, k);

    for (Weight t = 0; t <= W; ++t)
        if (auto pick = sweep.combine(t, t)) return sweep.build({t, t, std::nullopt, *pick, {}});

    // One path may have ν > μ as long as every other path's ν stays below
    // its μ and the two bounds interleave: ν_j ≤ A ≤ μ_exc, ν_exc ≤ B ≤ μ_j.
    Weight negative_mass = 0;
    for (const auto& w : forest.weights)
        for (Weight x : w) negative_mass += std::min<Weight>(x, 0);
    for (Weight A = negative_mass; A < W; ++A) {
        bool promising = false;
        for (int j = 0; j < m && !promising; ++j) promising = sweep.combine(A, A + 1, j, W, A).has_value();
        if (!promising) continue;
        for (Weight B = A + 1; B <= W; ++B)
            for (int j = 0; j < m; ++j)
                if (auto pick = sweep.combine(A, B, j, B, A)) return sweep.build({A, B, j, *pick, {}});
    }
    return std::nullopt;
}

}  // namespace cdg

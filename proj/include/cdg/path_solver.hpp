#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cdg/diffusion.hpp"
#include "cdg/graph.hpp"

namespace cdg {

class NotAPathForest : public std::invalid_argument {
public:
    NotAPathForest(const std::string& message, Vertex vertex) : std::invalid_argument(message), vertex(vertex) {}
    Vertex vertex;
};

/// A graph viewed as disjoint weighted paths. Each path is listed from the
/// endpoint with the smaller id; paths are ordered by that endpoint.
struct PathForest {
    std::vector<std::vector<Vertex>> paths;
    std::vector<std::vector<Weight>> weights;

    static PathForest from_graph(const WeightedGraph& graph);
    /// Consecutive ids, path after path.
    static PathForest from_weights(std::vector<std::vector<Weight>> weights);

    [[nodiscard]] int path_count() const { return static_cast<int>(paths.size()); }
    [[nodiscard]] int vertex_count() const;
    /// Sum of positive weights on path j.
    [[nodiscard]] Weight positive_total(int j) const;
    /// Largest positive_total over all paths (0 for an empty forest).
    [[nodiscard]] Weight utility_bound() const;
    [[nodiscard]] WeightedGraph to_graph() const;
};

/// One κ_j ∈ K_j per set with Σκ_j = k; the lexicographically smallest such
/// choice, or nothing. Each K_j must be sorted ascending.
std::optional<std::vector<int>> combine_counts(std::span<const std::vector<int>> sets, int k);

/// Certificate for a forest equilibrium: every path j admits counts[j]
/// players with ν_j ≤ t ≤ μ_j, except possibly the path `exceptional`,
/// which only needs ν ≤ upper and μ ≥ t (the others then satisfy μ ≥ upper).
struct BoundaryWitness {
    Weight t = 0;
    Weight upper = 0;
    std::optional<int> exceptional;
    std::vector<int> counts;
    /// Per path, sorted 0-based positions along the path.
    std::vector<std::vector<int>> positions;
};

struct ForestSolution {
    BoundaryWitness witness;
    StrategyProfile profile;
};

/// Exact solver for forests of weighted paths. Every returned profile has
/// been re-checked with is_nash on the whole forest.
std::optional<ForestSolution> solve_forest_weighted(const PathForest& forest, int k);

/// Profile on the forest's vertex ids from per-path positions, path by path.
StrategyProfile assemble_profile(const PathForest& forest, const std::vector<std::vector<int>>& positions);

}  // namespace cdg

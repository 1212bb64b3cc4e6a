#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

using StrategyProfile = std::vector<Vertex>;

inline constexpr int kNeutral = -1;
inline constexpr int kUndominated = -2;

struct DiffusionOutcome {
    /// Player index, kNeutral, or kUndominated.
    std::vector<int> owner;
    /// 1-based step at which the vertex was decided; 0 if undominated.
    std::vector<int> time;
    std::vector<Weight> utilities;
};

/// Synchronous diffusion from the given seeds. Throws std::out_of_range on a
/// bad vertex id.
DiffusionOutcome simulate(const WeightedGraph& graph, std::span<const Vertex> seeds);

/// Same, but insists on profile.size() == instance.k (std::invalid_argument).
DiffusionOutcome simulate(const GameInstance& instance, std::span<const Vertex> profile);

/// Utility of player i after it alone moves to v.
Weight utility_of_deviation(const GameInstance& instance, std::span<const Vertex> profile, int i, Vertex v);

struct Deviation {
    int player;
    Vertex vertex;
    Weight gain;
};

struct NashVerdict {
    std::optional<Deviation> counterexample;
    [[nodiscard]] bool equilibrium() const { return !counterexample; }
};

/// Scans players in index order, vertices in id order; the first strictly
/// improving move is returned.
NashVerdict is_nash(const GameInstance& instance, std::span<const Vertex> profile);

/// Best vertex for player i with everyone else fixed; ties go to the smaller id.
std::pair<Vertex, Weight> best_response(const GameInstance& instance, std::span<const Vertex> profile, int i);

}  // namespace cdg

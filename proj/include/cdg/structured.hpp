#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/diffusion.hpp"
#include "cdg/graph.hpp"

namespace cdg {

enum class GraphClass { Chain, Cochain, Threshold };

std::string_view to_string(GraphClass cls);
/// Accepts "chain", "cochain", "threshold".
std::optional<GraphClass> parse_graph_class(std::string_view name);

/// Graph split into sides X and Y, each listed so that neighbourhoods grow:
/// N(x_1) ⊆ N(x_2) ⊆ ... (closed neighbourhoods on a clique side).
struct InclusionOrderedGraph {
    WeightedGraph base;
    GraphClass cls = GraphClass::Chain;
    std::vector<Vertex> x;
    std::vector<Vertex> y;
    bool x_clique = false;
    bool y_clique = false;
};

/// The graph is not in the declared class; u and v witness it (an edge that
/// breaks the required side structure, or two vertices with incomparable
/// neighbourhoods).
class NotInClass : public std::invalid_argument {
public:
    NotInClass(const std::string& message, Vertex u, Vertex v) : std::invalid_argument(message), u(u), v(v) {}
    Vertex u;
    Vertex v;
};

InclusionOrderedGraph recognize_and_order(const WeightedGraph& graph, GraphClass cls);

struct ChainSolution {
    StrategyProfile profile;
    /// Guessed indices (1-based, 0 = side unused) of the last occupied vertex
    /// on the primary and secondary side.
    int top_primary = 0;
    int top_secondary = 0;
    /// True when Y played the role of the primary side.
    bool swapped = false;
};

/// Candidate search over guessed top vertices with greedy filling; every
/// candidate is checked with is_nash.
std::optional<ChainSolution> solve_chain(const InclusionOrderedGraph& instance, int k);

/// Utility of player i read off neighbourhood inclusion: 0 if its seed is
/// shared, its weight otherwise. Requires another seed v, held by exactly
/// one player, with N(s_i) ⊆ N(v) or N[s_i] ⊆ N[v]; throws
/// std::invalid_argument otherwise.
Weight inclusion_utility(const WeightedGraph& graph, std::span<const Vertex> profile, int i);

}  // namespace cdg

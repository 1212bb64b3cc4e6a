#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdg {

using Vertex = int;
using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected vertex-weighted graph with dense ids 0..n-1 and sorted
/// adjacency lists. Immutable once built.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Takes adjacency lists as given (sorted on the way in). No structural
    /// checks; pair with validate() when the lists come from outside.
    WeightedGraph(std::vector<std::vector<Vertex>> adjacency, std::vector<Weight> weights,
                  std::vector<std::optional<std::string>> names = {});

    /// Builds from an edge list; throws std::invalid_argument on self-loops,
    /// duplicate edges or out-of-range endpoints.
    static WeightedGraph from_edges(std::vector<Weight> weights, std::span<const Edge> edges,
                                    std::vector<std::optional<std::string>> names = {});

    /// Unit weights.
    static WeightedGraph unweighted(int n, std::span<const Edge> edges);

    [[nodiscard]] int size() const { return static_cast<int>(weights_.size()); }
    [[nodiscard]] std::int64_t edge_count() const;
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    [[nodiscard]] Weight weight(Vertex v) const { return weights_[v]; }
    [[nodiscard]] std::span<const Weight> weights() const { return weights_; }
    [[nodiscard]] const std::vector<std::vector<Vertex>>& adjacency() const { return adjacency_; }
    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
    [[nodiscard]] Weight total_weight() const;
    [[nodiscard]] bool is_unit_weight() const;

    /// Edges with u < v, lexicographically sorted.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Optional display names; never consulted by the solvers.
    [[nodiscard]] const std::vector<std::optional<std::string>>& names() const { return names_; }

    /// Connected components, each sorted, ordered by smallest member.
    [[nodiscard]] std::vector<std::vector<Vertex>> components() const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Weight> weights_;
    std::vector<std::optional<std::string>> names_;
};

struct GameInstance {
    WeightedGraph graph;
    int k = 1;

    friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

enum class ViolationKind { SelfLoop, DuplicateEdge, Asymmetric, IdOutOfRange, WeightCountMismatch, NoPlayers };

struct Violation {
    ViolationKind kind;
    Vertex u = -1;
    Vertex v = -1;
    std::string message;
};

/// First structural invariant the graph breaks, if any.
[[nodiscard]] std::optional<Violation> validate(const WeightedGraph& graph);
[[nodiscard]] std::optional<Violation> validate(const GameInstance& instance);

}  // namespace cdg

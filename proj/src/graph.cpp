#include "cdg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cdg {

WeightedGraph::WeightedGraph(std::vector<std::vector<Vertex>> adjacency, std::vector<Weight> weights,
                             std::vector<std::optional<std::string>> names)
    : adjacency_(std::move(adjacency)), weights_(std::move(weights)), names_(std::move(names)) {
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    if (names_.empty()) names_.resize(weights_.size());
}

WeightedGraph WeightedGraph::from_edges(std::vector<Weight> weights, std::span<const Edge> edges,
                                        std::vector<std::optional<std::string>> names) {
    const int n = static_cast<int>(weights.size());
    std::vector<std::vector<Vertex>> adjacency(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            std::ostringstream msg;
            msg << "edge (" << u << ", " << v << ") references a vertex outside 0.." << n - 1;
            throw std::invalid_argument(msg.str());
        }
        adjacency[u].push_back(v);
        if (u != v) adjacency[v].push_back(u);
    }
    WeightedGraph graph(std::move(adjacency), std::move(weights), std::move(names));
    if (auto violation = validate(graph)) throw std::invalid_argument(violation->message);
    return graph;
}

WeightedGraph WeightedGraph::unweighted(int n, std::span<const Edge> edges) {
    return from_edges(std::vector<Weight>(n, 1), edges);
}

std::int64_t WeightedGraph::edge_count() const {
    std::int64_t twice = 0;
    for (const auto& list : adjacency_) twice += static_cast<std::int64_t>(list.size());
    return twice / 2;
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const {
    const auto& list = adjacency_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

Weight WeightedGraph::total_weight() const { return std::accumulate(weights_.begin(), weights_.end(), Weight{0}); }

bool WeightedGraph::is_unit_weight() const {
    return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1; });
}

std::vector<Edge> WeightedGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::vector<Vertex>> WeightedGraph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> seen(size(), 0);
    for (Vertex root = 0; root < size(); ++root) {
        if (seen[root]) continue;
        std::vector<Vertex> members{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Vertex nb : adjacency_[members[head]])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    members.push_back(nb);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::optional<Violation> validate(const WeightedGraph& graph) {
    const auto& adjacency = graph.adjacency();
    const int n = static_cast<int>(adjacency.size());
    if (n != graph.size()) {
        std::ostringstream msg;
        msg << "adjacency has " << n << " lists but there are " << graph.size() << " weights";
        return Violation{ViolationKind::WeightCountMismatch, -1, -1, msg.str()};
    }
    for (Vertex u = 0; u < n; ++u) {
        const auto& list = adjacency[u];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Vertex v = list[i];
            if (v < 0 || v >= n) {
                std::ostringstream msg;
                msg << "vertex " << u << " lists neighbor " << v << ", ids must be dense in 0.." << n - 1;
                return Violation{ViolationKind::IdOutOfRange, u, v, msg.str()};
            }
            if (v == u) {
                std::ostringstream msg;
                msg << "self-loop at vertex " << u;
                return Violation{ViolationKind::SelfLoop, u, u, msg.str()};
            }
            if (i > 0 && list[i - 1] == v) {
                std::ostringstream msg;
                msg << "duplicate edge (" << u << ", " << v << ")";
                return Violation{ViolationKind::DuplicateEdge, u, v, msg.str()};
            }
            const auto& back = adjacency[v];
            if (!std::binary_search(back.begin(), back.end(), u)) {
                std::ostringstream msg;
                msg << "asymmetric adjacency: " << v << " in N(" << u << ") but " << u << " not in N(" << v << ")";
                return Violation{ViolationKind::Asymmetric, u, v, msg.str()};
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> validate(const GameInstance& instance) {
    if (instance.k < 1) {
        std::ostringstream msg;
        msg << "player count k must be at least 1, got " << instance.k;
        return Violation{ViolationKind::NoPlayers, -1, -1, msg.str()};
    }
    return validate(instance.graph);
}

}  // namespace cdg

#include "cdg/structured.hpp"

#include <algorithm>
#include <map>

namespace cdg {

namespace {

std::vector<Vertex> closed_neighborhood(const WeightedGraph& g, Vertex v) {
    std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<Vertex> neighborhood(const WeightedGraph& g, Vertex v, bool closed) {
    if (closed) return closed_neighborhood(g, v);
    return {g.neighbors(v).begin(), g.neighbors(v).end()};
}

bool nested(const WeightedGraph& g, Vertex u, Vertex v, bool closed) {
    const auto nu = neighborhood(g, u, closed);
    const auto nv = neighborhood(g, v, closed);
    return std::includes(nv.begin(), nv.end(), nu.begin(), nu.end());
}

void order_side(const WeightedGraph& g, std::vector<Vertex>& side, bool closed) {
    std::sort(side.begin(), side.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    for (std::size_t i = 0; i + 1 < side.size(); ++i)
        if (!nested(g, side[i], side[i + 1], closed))
            throw NotInClass("neighbourhoods of " + std::to_string(side[i]) + " and " + std::to_string(side[i + 1]) +
                                 " are not nested",
                             side[i], side[i + 1]);
}

// Two-colours the graph whose adjacency is `adjacent`; vertices without any
// such neighbour go to side 0, otherwise the smallest vertex of a component does.
template <class Adjacent>
std::vector<int> two_colour(int n, Adjacent adjacent, const char* relation) {
    std::vector<int> colour(n, -1);
    for (Vertex root = 0; root < n; ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex u = queue[head];
            for (Vertex v = 0; v < n; ++v) {
                if (v == u || !adjacent(u, v)) continue;
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    throw NotInClass(std::string("vertices ") + std::to_string(u) + " and " + std::to_string(v) + " are " +
                                         relation + " but must lie on the same side",
                                     std::min(u, v), std::max(u, v));
                }
            }
        }
    }
    return colour;
}

InclusionOrderedGraph split_by_colour(const WeightedGraph& g, GraphClass cls, const std::vector<int>& colour,
                                      bool cliques) {
    InclusionOrderedGraph out{g, cls, {}, {}, cliques, cliques};
    for (Vertex v = 0; v < g.size(); ++v) (colour[v] == 0 ? out.x : out.y).push_back(v);
    order_side(g, out.x, cliques);
    order_side(g, out.y, cliques);
    return out;
}

InclusionOrderedGraph recognize_threshold(const WeightedGraph& g) {
    const int n = g.size();
    std::vector<char> alive(n, 1);
    std::vector<int> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    InclusionOrderedGraph out{g, GraphClass::Threshold, {}, {}, true, false};
    for (int remaining = n; remaining > 0; --remaining) {
        Vertex pick = -1;
        bool dominating = false;
        for (Vertex v = 0; v < n && pick < 0; ++v)
            if (alive[v] && degree[v] == 0) pick = v;
        for (Vertex v = 0; v < n && pick < 0; ++v)
            if (alive[v] && degree[v] == remaining - 1) {
                pick = v;
                dominating = true;
            }
        if (pick < 0) {
            // Stuck: some pair of survivors has incomparable neighbourhoods.
            auto live = [&](Vertex u) {
                std::vector<Vertex> out;
                for (Vertex w : g.neighbors(u))
                    if (alive[w]) out.push_back(w);
                return out;
            };
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) {
                    if (!alive[u] || !alive[v]) continue;
                    auto nu = live(u), nv = live(v);
                    std::erase(nu, v);
                    std::erase(nv, u);
                    const bool uv = std::includes(nv.begin(), nv.end(), nu.begin(), nu.end());
                    const bool vu = std::includes(nu.begin(), nu.end(), nv.begin(), nv.end());
                    if (!uv && !vu)
                        throw NotInClass("neighbourhoods of " + std::to_string(u) + " and " + std::to_string(v) +
                                             " are not nested",
                                         u, v);
                }
            throw NotInClass("graph is not a threshold graph", -1, -1);
        }
        (dominating ? out.x : out.y).push_back(pick);
        alive[pick] = 0;
        for (Vertex w : g.neighbors(pick)) --degree[w];
    }
    order_side(g, out.x, true);
    order_side(g, out.y, false);
    return out;
}

struct Candidate {
    Weight weight;
    int side;
    int index;
    Vertex vertex;
};

std::optional<StrategyProfile> build_candidate(const WeightedGraph& g, const std::vector<Vertex>& primary,
                                               const std::vector<Vertex>& secondary, bool primary_is_x, int top_p,
                                               int top_s, int k) {
    StrategyProfile profile{primary[top_p - 1]};
    if (top_s > 0) profile.push_back(secondary[top_s - 1]);
    if (static_cast<int>(profile.size()) > k) return std::nullopt;
    std::vector<Candidate> pool;
    for (int i = 0; i + 1 < top_p; ++i) pool.push_back({g.weight(primary[i]), primary_is_x ? 0 : 1, i, primary[i]});
    for (int i = 0; i + 1 < top_s; ++i) pool.push_back({g.weight(secondary[i]), primary_is_x ? 1 : 0, i, secondary[i]});
    std::sort(pool.begin(), pool.end(), [](const Candidate& a, const Candidate& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.side != b.side) return a.side < b.side;
        return a.index < b.index;
    });
    std::size_t next = 0;
    while (static_cast<int>(profile.size()) < k) {
        if (next < pool.size() && pool[next].weight >= 0)
            profile.push_back(pool[next++].vertex);
        else
            profile.push_back(primary[top_p - 1]);
    }
    return profile;
}

}  // namespace

std::string_view to_string(GraphClass cls) {
    switch (cls) {
        case GraphClass::Chain: return "chain";
        case GraphClass::Cochain: return "cochain";
        case GraphClass::Threshold: return "threshold";
    }
    return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
    if (name == "chain") return GraphClass::Chain;
    if (name == "cochain") return GraphClass::Cochain;
    if (name == "threshold") return GraphClass::Threshold;
    return std::nullopt;
}

InclusionOrderedGraph recognize_and_order(const WeightedGraph& graph, GraphClass cls) {
    const int n = graph.size();
    switch (cls) {
        case GraphClass::Chain: {
            auto colour = two_colour(n, [&](Vertex u, Vertex v) { return graph.has_edge(u, v); }, "adjacent");
            return split_by_colour(graph, cls, colour, false);
        }
        case GraphClass::Cochain: {
            auto colour = two_colour(n, [&](Vertex u, Vertex v) { return !graph.has_edge(u, v); }, "non-adjacent");
            return split_by_colour(graph, cls, colour, true);
        }
        case GraphClass::Threshold: return recognize_threshold(graph);
    }
    throw std::invalid_argument("unknown graph class");
}

std::optional<ChainSolution> solve_chain(const InclusionOrderedGraph& instance, int k) {
    const GameInstance game{instance.base, k};
    const auto& X = instance.x;
    const auto& Y = instance.y;
    const int p = static_cast<int>(X.size());
    const int q = static_cast<int>(Y.size());

    for (int sx = 1; sx <= p; ++sx)
        for (int sy = 0; sy <= q; ++sy)
            if (auto profile = build_candidate(instance.base, X, Y, true, sx, sy, k))
                if (is_nash(game, *profile).equilibrium()) return ChainSolution{*profile, sx, sy, false};
    // No player on X: the same search with the roles of the sides exchanged.
    for (int sy = 1; sy <= q; ++sy)
        if (auto profile = build_candidate(instance.base, Y, X, false, sy, 0, k))
            if (is_nash(game, *profile).equilibrium()) return ChainSolution{*profile, sy, 0, true};
    return std::nullopt;
}

Weight inclusion_utility(const WeightedGraph& graph, std::span<const Vertex> profile, int i) {
    if (i < 0 || i >= static_cast<int>(profile.size())) throw std::invalid_argument("player index out of range");
    const Vertex u = profile[i];
    std::map<Vertex, int> count;
    for (Vertex s : profile) ++count[s];
    for (std::size_t j = 0; j < profile.size(); ++j) {
        const Vertex v = profile[j];
        if (v == u || count[v] != 1) continue;
        if (nested(graph, u, v, false) || nested(graph, u, v, true)) return count[u] > 1 ? 0 : graph.weight(u);
    }
    throw std::invalid_argument("seed " + std::to_string(u) +
                                " is not inclusion-dominated by a seed held by exactly one other player");
}

}  // namespace cdg

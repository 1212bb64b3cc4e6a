#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cdg/graph.hpp"
#include "oracles/reference.hpp"

namespace testing_support {

inline oracle::Adj adjacency_of(const cdg::WeightedGraph& g) {
    oracle::Adj adj(g.size());
    for (int v = 0; v < g.size(); ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    return adj;
}

inline std::vector<long long> weights_of(const cdg::WeightedGraph& g) {
    return {g.weights().begin(), g.weights().end()};
}

inline cdg::WeightedGraph path_graph(const std::vector<cdg::Weight>& w) {
    std::vector<cdg::Edge> edges;
    for (int v = 0; v + 1 < static_cast<int>(w.size()); ++v) edges.emplace_back(v, v + 1);
    return cdg::WeightedGraph::from_edges(w, edges);
}

inline cdg::WeightedGraph random_graph(std::mt19937& rng, int n, double p, int wmin, int wmax) {
    std::bernoulli_distribution edge(p);
    std::uniform_int_distribution<int> weight(wmin, wmax);
    std::vector<cdg::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) edges.emplace_back(u, v);
    std::vector<cdg::Weight> w(n);
    for (auto& x : w) x = weight(rng);
    return cdg::WeightedGraph::from_edges(w, edges);
}

/// Uniform random labelled tree via a random Prüfer-free attachment.
inline cdg::WeightedGraph random_tree(std::mt19937& rng, int n) {
    std::vector<cdg::Edge> edges;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        edges.emplace_back(order[parent(rng)], order[i]);
    }
    return cdg::WeightedGraph::unweighted(n, edges);
}

inline std::vector<cdg::Weight> random_weights(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<cdg::Weight> w(n);
    for (auto& x : w) x = d(rng);
    return w;
}

}  // namespace testing_support

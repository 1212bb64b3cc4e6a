#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cdg/structured.hpp"
#include "support.hpp"

namespace testing_support {

/// Random member of the class: sides of size p and q, cross edges x_i ~ y_j
/// iff j < d_i for non-decreasing d, cliques per class, labels shuffled.
inline cdg::WeightedGraph random_class_graph(std::mt19937& rng, cdg::GraphClass cls, int p, int q, int wmin,
                                             int wmax) {
    const int n = p + q;
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<int> d(p);
    for (auto& x : d) x = static_cast<int>(rng() % (q + 1));
    std::sort(d.begin(), d.end());
    std::vector<cdg::Edge> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < d[i]; ++j) edges.emplace_back(label[i], label[p + j]);
    const bool x_clique = cls != cdg::GraphClass::Chain;
    const bool y_clique = cls == cdg::GraphClass::Cochain;
    if (x_clique)
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) edges.emplace_back(label[i], label[j]);
    if (y_clique)
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j) edges.emplace_back(label[p + i], label[p + j]);
    return cdg::WeightedGraph::from_edges(random_weights(rng, n, wmin, wmax), edges);
}

/// Class membership by trying every split into X and Y.
inline bool in_class_brute_force(const cdg::WeightedGraph& g, cdg::GraphClass cls) {
    const int n = g.size();
    auto closed = [&](int v) {
        std::vector<int> s(g.neighbors(v).begin(), g.neighbors(v).end());
        s.push_back(v);
        std::sort(s.begin(), s.end());
        return s;
    };
    auto open = [&](int v) { return std::vector<int>(g.neighbors(v).begin(), g.neighbors(v).end()); };
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> sides[2];
        for (int v = 0; v < n; ++v) sides[(mask >> v) & 1].push_back(v);
        const bool clique[2] = {cls != cdg::GraphClass::Chain, cls == cdg::GraphClass::Cochain};
        bool ok = true;
        for (int s = 0; s < 2 && ok; ++s)
            for (std::size_t i = 0; i < sides[s].size() && ok; ++i)
                for (std::size_t j = i + 1; j < sides[s].size() && ok; ++j) {
                    const int a = sides[s][i], b = sides[s][j];
                    if (g.has_edge(a, b) != clique[s]) ok = false;
                    const auto na = clique[s] ? closed(a) : open(a);
                    const auto nb = clique[s] ? closed(b) : open(b);
                    if (!subset(na, nb) && !subset(nb, na)) ok = false;
                }
        if (ok) return true;
    }
    return false;
}

}  // namespace testing_support

#include "cdg/diffusion.hpp"

#include <stdexcept>
#include <string>

namespace cdg {

namespace {

void check_seeds(const WeightedGraph& graph, std::span<const Vertex> seeds) {
    for (std::size_t i = 0; i < seeds.size(); ++i)
        if (seeds[i] < 0 || seeds[i] >= graph.size())
            throw std::out_of_range("player " + std::to_string(i) + " seed " + std::to_string(seeds[i]) +
                                    " is not a vertex id (n = " + std::to_string(graph.size()) + ")");
}

void check_player(const GameInstance& instance, std::span<const Vertex> profile, int i) {
    if (static_cast<int>(profile.size()) != instance.k)
        throw std::invalid_argument("profile has " + std::to_string(profile.size()) + " entries, k = " +
                                    std::to_string(instance.k));
    if (i < 0 || i >= instance.k) throw std::out_of_range("player index " + std::to_string(i) + " out of range");
}

}  // namespace

DiffusionOutcome simulate(const WeightedGraph& graph, std::span<const Vertex> seeds) {
    check_seeds(graph, seeds);
    const int n = graph.size();
    DiffusionOutcome out;
    out.owner.assign(n, kUndominated);
    out.time.assign(n, 0);
    out.utilities.assign(seeds.size(), 0);

    // claim[v] holds the single claimant this round or kNeutral once contested;
    // stamp[v] tells whether claim[v] belongs to the current round.
    std::vector<int> claim(n, kUndominated);
    std::vector<int> stamp(n, 0);
    std::vector<Vertex> frontier, touched;

    for (int p = 0; p < static_cast<int>(seeds.size()); ++p) {
        const Vertex s = seeds[p];
        if (stamp[s] == 0) {
            stamp[s] = 1;
            claim[s] = p;
            touched.push_back(s);
        } else {
            claim[s] = kNeutral;
        }
    }

    for (int round = 1; !touched.empty(); ++round) {
        frontier.clear();
        for (Vertex v : touched) {
            out.owner[v] = claim[v];
            out.time[v] = round;
            if (claim[v] >= 0) frontier.push_back(v);
        }
        touched.clear();
        const int next = round + 1;
        for (Vertex u : frontier) {
            const int p = out.owner[u];
            for (Vertex v : graph.neighbors(u)) {
                if (out.owner[v] != kUndominated) continue;
                if (stamp[v] != next) {
                    stamp[v] = next;
                    claim[v] = p;
                    touched.push_back(v);
                } else if (claim[v] != p) {
                    claim[v] = kNeutral;
                }
            }
        }
    }

    for (Vertex v = 0; v < n; ++v)
        if (out.owner[v] >= 0) out.utilities[out.owner[v]] += graph.weight(v);
    return out;
}

DiffusionOutcome simulate(const GameInstance& instance, std::span<const Vertex> profile) {
    if (static_cast<int>(profile.size()) != instance.k)
        throw std::invalid_argument("profile has " + std::to_string(profile.size()) + " entries, k = " +
                                    std::to_string(instance.k));
    return simulate(instance.graph, profile);
}

Weight utility_of_deviation(const GameInstance& instance, std::span<const Vertex> profile, int i, Vertex v) {
    check_player(instance, profile, i);
    StrategyProfile moved(profile.begin(), profile.end());
    moved[i] = v;
    return simulate(instance.graph, moved).utilities[i];
}

NashVerdict is_nash(const GameInstance& instance, std::span<const Vertex> profile) {
    const auto base = simulate(instance, profile);
    StrategyProfile moved(profile.begin(), profile.end());
    for (int i = 0; i < instance.k; ++i) {
        for (Vertex v = 0; v < instance.graph.size(); ++v) {
            if (v == profile[i]) continue;
            moved[i] = v;
            const Weight u = simulate(instance.graph, moved).utilities[i];
            if (u > base.utilities[i]) return {Deviation{i, v, u - base.utilities[i]}};
        }
        moved[i] = profile[i];
    }
    return {};
}

std::pair<Vertex, Weight> best_response(const GameInstance& instance, std::span<const Vertex> profile, int i) {
    check_player(instance, profile, i);
    StrategyProfile moved(profile.begin(), profile.end());
    Vertex best = -1;
    Weight best_u = 0;
    for (Vertex v = 0; v < instance.graph.size(); ++v) {
        moved[i] = v;
        const Weight u = simulate(instance.graph, moved).utilities[i];
        if (best < 0 || u > best_u) {
            best = v;
            best_u = u;
        }
    }
    return {best, best_u};
}

}  // namespace cdg

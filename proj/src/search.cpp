#include "cdg/search.hpp"

#include <cmath>
#include <sstream>

namespace cdg {

namespace {

// Players sharing a seed are interchangeable, so one deviation scan per
// distinct seed suffices on a sorted tuple.
bool sorted_profile_is_nash(const WeightedGraph& graph, StrategyProfile& profile) {
    const auto base = simulate(graph, profile);
    const int k = static_cast<int>(profile.size());
    for (int i = 0; i < k; ++i) {
        if (i > 0 && profile[i] == profile[i - 1]) continue;
        const Vertex own = profile[i];
        for (Vertex v = 0; v < graph.size(); ++v) {
            if (v == own) continue;
            profile[i] = v;
            const Weight u = simulate(graph, profile).utilities[i];
            if (u > base.utilities[i]) {
                profile[i] = own;
                return false;
            }
        }
        profile[i] = own;
    }
    return true;
}

}  // namespace

SearchReport brute_force(const GameInstance& instance, SearchMode mode, double budget) {
    const int n = instance.graph.size();
    const int k = instance.k;
    const double cost = std::pow(static_cast<double>(n), static_cast<double>(k));
    if (cost > budget) {
        std::ostringstream msg;
        msg << "search space n^k = " << n << "^" << k << " exceeds the budget of " << budget;
        throw BudgetExceeded(msg.str());
    }
    SearchReport report;
    if (n == 0) return report;

    StrategyProfile tuple(k, 0);
    while (true) {
        ++report.profiles_checked;
        if (sorted_profile_is_nash(instance.graph, tuple)) {
            if (!report.found) report.found = tuple;
            if (mode == SearchMode::First) break;
            report.all.push_back(tuple);
        }
        int pos = k - 1;
        while (pos >= 0 && tuple[pos] == n - 1) --pos;
        if (pos < 0) break;
        const Vertex next = tuple[pos] + 1;
        for (int j = pos; j < k; ++j) tuple[j] = next;
    }
    return report;
}

}  // namespace cdg

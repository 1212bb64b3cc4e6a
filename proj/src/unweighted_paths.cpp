#include "cdg/unweighted_paths.hpp"

#include <stdexcept>
#include <string>

namespace cdg {

namespace {

void require_positive(int t) {
    if (t <= 0) throw std::invalid_argument("boundary t must be positive, got " + std::to_string(t));
}

int largest_with_parity(int bound, int parity) {
    if (bound < 0) return -1;
    return bound % 2 == parity ? bound : bound - 1;
}

// Gap-vector search for κ ≥ 2 players on distinct vertices. δ_0 and δ_κ are
// the outer stretches, δ_1..δ_{κ-1} the stretches between neighbours.
class GapSearch {
public:
    GapSearch(int n, int t, int kappa)
        : t_(t), kappa_(kappa), total_(n - kappa), memo_((kappa + 1) * (2 * t + 1) * (n + 1), -1) {}

    std::optional<std::vector<int>> run() {
        if (total_ < 0) return std::nullopt;
        std::vector<int> gaps;
        for (int d0 = lo_end(); d0 <= t_ && d0 <= total_; ++d0)
            if (feasible(1, d0, total_ - d0)) {
                gaps.push_back(d0);
                int prev = d0, rem = total_ - d0;
                for (int i = 1; i <= kappa_; ++i) {
                    for (int d = 0; d <= rem; ++d)
                        if (step_ok(i, prev, d, rem) && (i == kappa_ || feasible(i + 1, d, rem - d))) {
                            gaps.push_back(d);
                            prev = d;
                            rem -= d;
                            break;
                        }
                }
                return gaps;
            }
        return std::nullopt;
    }

private:
    int lo_end() const { return t_ >= 1 ? t_ - 1 : 0; }

    // May δ_i = d follow δ_{i-1} = prev with rem vertices still to place?
    bool step_ok(int i, int prev, int d, int rem) const {
        if (i == kappa_) return d == rem && d >= lo_end() && d <= t_;
        if (i == 1 || i == kappa_ - 1) {
            if (d != 0) return false;
        } else if (d > 2 * t_) {
            return false;
        }
        if (i >= 2) {
            if (1 + prev / 2 + d / 2 < t_) return false;
            if (prev % 2 == 1 && d % 2 == 1) return false;
        }
        return true;
    }

    bool feasible(int i, int prev, int rem) {
        if (prev > 2 * t_) return false;
        int& slot = memo_[(i * (2 * t_ + 1) + prev) * (total_ + 1) + rem];
        if (slot >= 0) return slot;
        bool ok = false;
        for (int d = 0; d <= rem && !ok; ++d)
            ok = step_ok(i, prev, d, rem) && (i == kappa_ || feasible(i + 1, d, rem - d));
        slot = ok;
        return ok;
    }

    int t_;
    int kappa_;
    int total_;
    std::vector<int> memo_;
};

}  // namespace

bool admits_by_inequalities(int n, int t, int kappa) {
    require_positive(t);
    switch (kappa) {
        case 0: return n <= t;
        case 1: return t <= n && n <= 2 * t + 1;
        case 2: return 2 * t <= n && n <= 2 * t + 2;
        case 3: return t == 1 && 3 <= n && n <= 5;
        default: {
            const int upper = (2 * kappa - 4) * t + kappa;
            const int lower = kappa % 2 == 1 ? (kappa + 1) * t - 1 : kappa * t;
            return lower <= n && n <= upper;
        }
    }
}

UnweightedRange admissible_range_unweighted(int n, int t) {
    require_positive(t);
    if (n <= t - 1) return {0, 0, 1};
    if (n == t) return {0, 1, 2};
    if (n <= 2 * t - 1) return {1, 1, 3};
    if (n <= 2 * t + 1) return {1, n == 3 ? 3 : 2, 4};
    if (n == 2 * t + 2) return {2, n == 4 ? 4 : 2, 5};
    if (n <= 4 * t - 1) return {1, 0, 6};
    const int lo = (n + 4 * t + 2 * t) / (2 * t + 1);
    const int k_odd = largest_with_parity((n - t + 1) / t, 1);
    const int k_even = largest_with_parity(n / t, 0);
    return {lo, std::max(k_odd, k_even), 7};
}

std::optional<std::vector<int>> unweighted_path_profile(int n, int t, int kappa) {
    require_positive(t);
    if (kappa == 0) return n <= t ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
    if (kappa == 1) {
        const int left = std::min(t, n - 1);
        if (n < t || n - 1 - left > t) return std::nullopt;
        return std::vector<int>{left};
    }
    auto gaps = GapSearch(n, t, kappa).run();
    if (!gaps) return std::nullopt;
    std::vector<int> positions;
    int pos = (*gaps)[0];
    for (int i = 0; i < kappa; ++i) {
        positions.push_back(pos);
        pos += 1 + (*gaps)[i + 1];
    }
    return positions;
}

std::optional<ForestSolution> solve_forest_unweighted(const PathForest& forest, int k) {
    for (const auto& w : forest.weights)
        for (Weight x : w)
            if (x != 1) throw std::invalid_argument("unweighted path solver needs unit weights, found " + std::to_string(x));
    const int n = forest.vertex_count();
    const int m = forest.path_count();
    if (k < 1 || n == 0) return std::nullopt;
    const GameInstance instance{forest.to_graph(), k};

    auto finish = [&](BoundaryWitness witness) {
        ForestSolution solution{witness, assemble_profile(forest, witness.positions)};
        if (!is_nash(instance, solution.profile).equilibrium())
            throw std::logic_error("constructed unweighted path-forest profile is not a Nash equilibrium");
        return solution;
    };

    if (k >= n) {
        BoundaryWitness witness;
        for (int j = 0; j < m; ++j) {
            std::vector<int> all(forest.paths[j].size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            for (std::size_t i = 0; i < forest.paths[j].size(); ++i)
                if (forest.paths[j][i] == 0) all.insert(all.end(), k - n, static_cast<int>(i));
            std::sort(all.begin(), all.end());
            witness.counts.push_back(static_cast<int>(all.size()));
            witness.positions.push_back(std::move(all));
        }
        return finish(witness);
    }

    int longest = 0;
    for (const auto& p : forest.paths) longest = std::max(longest, static_cast<int>(p.size()));
    for (int t = 1; t <= longest; ++t) {
        std::vector<UnweightedRange> ranges;
        long lo_sum = 0, hi_sum = 0;
        bool empty = false;
        for (const auto& p : forest.paths) {
            ranges.push_back(admissible_range_unweighted(static_cast<int>(p.size()), t));
            empty = empty || ranges.back().empty();
            lo_sum += ranges.back().lo;
            hi_sum += ranges.back().hi;
        }
        if (empty || k < lo_sum || k > hi_sum) continue;
        BoundaryWitness witness{t, t, std::nullopt, {}, {}};
        int spare = k - static_cast<int>(lo_sum);
        for (int j = 0; j < m; ++j) {
            const int extra = std::min(spare, ranges[j].hi - ranges[j].lo);
            spare -= extra;
            const int kappa = ranges[j].lo + extra;
            auto positions = unweighted_path_profile(static_cast<int>(forest.paths[j].size()), t, kappa);
            if (!positions) throw std::logic_error("no placement for an admissible unweighted path count");
            witness.counts.push_back(kappa);
            witness.positions.push_back(std::move(*positions));
        }
        return finish(witness);
    }
    return std::nullopt;
}

}  // namespace cdg

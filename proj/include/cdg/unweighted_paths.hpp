#pragma once

#include <optional>
#include <vector>

#include "cdg/path_solver.hpp"

namespace cdg {

/// Closed-form test: does an unweighted n-path admit κ players with
/// boundary t ≥ 1?
bool admits_by_inequalities(int n, int t, int kappa);

/// Admissible κ values for an unweighted n-path with boundary t ≥ 1. They
/// always form one interval [lo, hi] (empty when lo > hi). `case_id` is the
/// row 1..7 of the case table that applies.
struct UnweightedRange {
    int lo = 1;
    int hi = 0;
    int case_id = 0;

    [[nodiscard]] bool empty() const { return lo > hi; }
    [[nodiscard]] bool contains(int kappa) const { return lo <= kappa && kappa <= hi; }
};

/// Throws std::invalid_argument for t ≤ 0.
UnweightedRange admissible_range_unweighted(int n, int t);

/// Sorted 0-based positions of a κ-player equilibrium on an unweighted
/// n-path with ν ≤ t ≤ μ, or nothing if none exists.
std::optional<std::vector<int>> unweighted_path_profile(int n, int t, int kappa);

/// Forest of unit-weight paths. Rejects other weights with
/// std::invalid_argument. Returned profiles pass is_nash.
std::optional<ForestSolution> solve_forest_unweighted(const PathForest& forest, int k);

}  // namespace cdg

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cdg/diffusion.hpp"

namespace cdg {

enum class SearchMode { First, All };

struct SearchReport {
    std::optional<StrategyProfile> found;
    std::uint64_t profiles_checked = 0;
    /// Mode All only: every equilibrium as a non-decreasing tuple, in
    /// lexicographic order.
    std::vector<StrategyProfile> all;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultSearchBudget = 1e8;

/// Exhaustive search over non-decreasing k-tuples. Refuses to start when
/// n^k exceeds the budget.
SearchReport brute_force(const GameInstance& instance, SearchMode mode = SearchMode::First,
                         double budget = kDefaultSearchBudget);

}  // namespace cdg

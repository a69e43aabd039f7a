#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dinner {

// m x m array over symbols 1..n2; each cell empty or an unordered pair
// stored as (lo, hi).
struct HowellDesign {
    int m = 0;
    int n2 = 0;
    std::vector<std::optional<std::pair<int, int>>> cells;  // row-major

    const std::optional<std::pair<int, int>>& at(int row, int col) const
    {
        return cells[static_cast<std::size_t>(row) * m + col];
    }
    std::optional<std::pair<int, int>>& at(int row, int col) { return cells[static_cast<std::size_t>(row) * m + col]; }
};

// Existence characterisation: n <= m <= 2n-1 and (m, 2n) not one of
// (2,4), (3,4), (5,6), (5,8).
bool howell_exists(int m, int n2);

enum class HowellStatus { Found, Exhausted, BudgetExceeded };

struct HowellSearch {
    HowellStatus status = HowellStatus::Exhausted;
    std::optional<HowellDesign> design;
    std::int64_t nodes = 0;
};

inline constexpr std::int64_t kDefaultHowellBudget = 50'000'000;

// Depth-first search, row by row. Row 1 is fixed to {1,2},{3,4},... in the
// leading columns; rows 2..n hold column 1's pairs in increasing order and
// the remaining rows leave column 1 empty. Exhausted means no design exists.
HowellSearch search_howell(int m, int n2, std::int64_t node_budget = kDefaultHowellBudget);

// A design when one exists, empty when none does. Throws
// SearchBudgetExhausted when the search gives up first. Found designs are
// cached per (m, n2).
std::optional<HowellDesign> generate_howell(int m, int n2, std::int64_t node_budget = kDefaultHowellBudget);

}  // namespace dinner

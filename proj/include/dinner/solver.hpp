#pragma once

#include <cstdint>
#include <optional>

#include "dinner/model.hpp"

namespace dinner {

struct SolveLimits {
    int max_dinners = 64;
    std::int64_t node_budget = 50'000'000;
    double time_budget = 60.0;  // seconds
    // Off: no capacity pruning and deepening starts at 1 instead of lb_best.
    bool pruning = true;
    // On budget exhaustion, return the best construction as FeasibleOnly.
    bool fallback_witness = true;
};

enum class SolveStatus { Optimal, FeasibleOnly, InfeasibleAtBound, BudgetExhausted };

const char* to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::BudgetExhausted;
    std::optional<int> value;
    std::optional<Schedule> witness;
    std::int64_t nodes = 0;
    // Every dinner count below this is proven impossible.
    int lower_bound = 0;
};

// Iterative deepening over the dinner count D. For each D the search covers
// the first unmet (supplier, customer) pair with a table S x C placed in an
// open dinner or the next fresh one, so dinners appear in first-use order.
SolveResult solve_exact(const Instance& inst, const SolveLimits& limits = {});

// DINNER_NODE_BUDGET when set to a positive integer, otherwise `fallback`.
std::int64_t default_node_budget(std::int64_t fallback = 50'000'000);

enum class Certificate { Optimal, Improvable, Inconclusive };

const char* to_string(Certificate cert);

// Whether no schedule with fewer dinners exists. Requires a feasible input.
Certificate certify_optimal(const Schedule& sched, const SolveLimits& limits = {});

}  // namespace dinner

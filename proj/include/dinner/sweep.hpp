#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dinner/bounds.hpp"
#include "dinner/model.hpp"
#include "dinner/solver.hpp"

namespace dinner {

// Every instance with 1 <= t <= t_max, ..., 1 <= gamma <= gamma_max, in
// lexicographic (t, s, c, sigma, gamma) order.
struct GridSpec {
    int t_max = 1;
    int s_max = 1;
    int c_max = 1;
    int sigma_max = 1;
    int gamma_max = 1;
};

std::vector<Instance> instance_grid(const GridSpec& spec);

struct OracleCell {
    Instance inst;
    std::int64_t lb_best = 0;
    std::int64_t ub_best = 0;
    int best_count = 0;
    std::string best_strategy;
    bool best_feasible = false;
    SolveStatus status = SolveStatus::BudgetExhausted;
    std::optional<int> optimum;
    std::int64_t nodes = 0;
    std::string error;

    friend bool operator==(const OracleCell&, const OracleCell&) = default;
};

OracleCell oracle_cell(const Instance& inst, const SolveLimits& limits);

// One cell per instance, same order as the input. The parallel version
// spreads cells over OpenMP threads; results are identical to the serial one.
std::vector<OracleCell> oracle_sweep(const std::vector<Instance>& instances, const SolveLimits& limits);
std::vector<OracleCell> oracle_sweep_serial(const std::vector<Instance>& instances, const SolveLimits& limits);

struct LpMismatch {
    std::int64_t s = 0;
    std::int64_t cg = 0;
    std::int64_t sigma = 0;
    Rational closed_form;
    Rational breakpoint_scan;

    friend bool operator==(const LpMismatch&, const LpMismatch&) = default;
};

// Compares lp_closed_form with lp_breakpoint_value for 1 <= s <= s_max,
// 1 <= cg <= cg_max, 1 <= sigma <= sigma_max. Empty means full agreement.
std::vector<LpMismatch> lp_crosscheck(int s_max, int cg_max, int sigma_max);
std::vector<LpMismatch> lp_crosscheck_serial(int s_max, int cg_max, int sigma_max);

struct BuildCell {
    Instance inst;
    std::string strategy;
    int dinners = 0;
    bool feasible = false;
    std::int64_t lb_best = 0;
    std::int64_t ub_best = 0;
    std::string error;

    friend bool operator==(const BuildCell&, const BuildCell&) = default;
};

// best_feasible plus validation for every instance.
std::vector<BuildCell> build_sweep(const std::vector<Instance>& instances);
std::vector<BuildCell> build_sweep_serial(const std::vector<Instance>& instances);

}  // namespace dinner

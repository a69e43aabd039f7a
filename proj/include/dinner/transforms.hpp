#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "dinner/howell.hpp"
#include "dinner/model.hpp"

namespace dinner {

// Splits every dinner's tables into consecutive chunks of t1; each chunk is
// a dinner of its own. The result's instance has t = t1.
Schedule split_tables(const Schedule& sched, int t1);

// Splits every dinner into copies where each table keeps its customers and
// its g-th chunk of at most sigma1 suppliers (ids in ascending order).
// Tables with no chunk and empty copies are dropped.
Schedule split_sigma(const Schedule& sched, int sigma1);

// Customers taken in blocks of gamma1. The derived instance has ceil(c/gamma1)
// super-customers and floor(gamma/gamma1) of them per table, so expanded
// tables never exceed gamma.
struct GammaGrouping {
    Instance original;
    Instance derived;
    CustomerGrouping grouping;

    Schedule expand(const Schedule& derived_schedule) const;
};

GammaGrouping group_gamma(const Instance& inst, int gamma1);

// Suppliers of `second` are shifted by first.instance.s and its dinners
// appended. t, c, sigma and gamma must agree; `second` may have s = 0 and
// no dinners.
Schedule concat_suppliers(const Schedule& first, const Schedule& second);
Schedule concat_suppliers(std::span<const Schedule> parts);

struct PipelineBuild {
    Schedule schedule;
    // False when the sigma=2 base had to fall back to the sigma=1 route and
    // the count may exceed the closed-form bound.
    bool within_bound = true;
};

// sigma=2 base on min(ceil(c/gamma), s) tables, then sigma and table
// splitting. Also tries the base on min(ceil(c/gamma), ceil(s/2)) tables
// when s*gamma > c and keeps the shorter schedule.
PipelineBuild build_ub1(const Instance& inst, std::int64_t howell_budget = kDefaultHowellBudget);

// Requires ceil(s/sigma) <= ceil(c/gamma).
Schedule build_ub2(const Instance& inst);

// Supplier blocks from dividing ceil(s/sigma) by ceil(c/gamma), one ub2
// schedule per block, concatenated.
Schedule build_eucli(const Instance& inst);

struct BestBuild {
    Schedule schedule;
    std::string strategy;
    bool proven_optimal = false;

    int dinner_count() const { return schedule.dinner_count(); }
};

// Fewest dinners among the optimal-case dispatch, ub2, ub1 and eucli;
// ties go to the earlier one in that order.
BestBuild best_feasible(const Instance& inst, std::int64_t howell_budget = kDefaultHowellBudget);

}  // namespace dinner

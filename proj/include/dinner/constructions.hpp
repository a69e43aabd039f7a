#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dinner/coloring.hpp"
#include "dinner/howell.hpp"
#include "dinner/model.hpp"

namespace dinner {

// c <= gamma: all customers at one table, suppliers in blocks of sigma.
Schedule build_trivial(const Instance& inst);

// sigma = 1: equitable colouring of K_{s, ceil(c/gamma)} with
// max(s, cg, ceil(s*cg/t)) colours, one dinner per colour.
Schedule build_sigma1(const Instance& inst);

enum class ExceptionKey { S4C3, S6C5, S8C5, S4C2 };

const char* to_string(ExceptionKey key);

// The small hand-made grids for the cases without a Howell design.
ScheduleTemplate exceptional_schedule(ExceptionKey key);

// The verbatim S8C5 grid never seats supplier 6 with group 4; this copy
// has {3,6} in row 4, column 4, the single completion keeping every row,
// column and pair valid. The other grids are returned unchanged.
ScheduleTemplate repaired_exceptional_schedule(ExceptionKey key);

// Rows become dinners and columns customer groups. Suppliers above
// inst.s (padding) are dropped, as are the tables and dinners they empty.
Schedule schedule_from_template(const ScheduleTemplate& tpl, const Instance& inst);

// Dinner count reached by the sigma=2 Howell route for s suppliers and cg
// customer groups when only `tables` tables are available; empty when the
// route needs more tables or has no design. Assumes cg <= s.
std::optional<int> sigma2_route_dinners(int s, int cg, int tables);

// sigma = 2, s*gamma > c, t >= min(ceil(c/gamma), ceil(s/2)).
// max(cg, ceil(s/2)) dinners, or 3 when (cg, s) is (2, 3) or (2, 4).
// Throws PreconditionError outside that range and also when s is even with
// cg = s, or when an exceptional grid needs more than t tables.
Schedule build_howell_schedule(const Instance& inst, std::int64_t howell_budget = kDefaultHowellBudget);

// Dinner count of the cas-par case: 2cg - s + 1 for even s and
// ceil(cg*s/t + 3 - 1/t - 2t) for odd s.
std::int64_t cas_par_dinners(const Instance& inst);

// t = ceil(s/2), sigma = 2, cg >= 3s/2.
Schedule build_cas_par(const Instance& inst, std::int64_t howell_budget = kDefaultHowellBudget);

bool is_prime(int p);

// t = gamma = 1, s = p^2 with p prime, c <= p <= sigma: p*c dinners.
Schedule build_prime(const Instance& inst);

struct OptimalBuild {
    Schedule schedule;
    std::string strategy;
    bool proven_optimal = true;
};

// Runs the first special-case construction whose preconditions hold.
std::optional<OptimalBuild> dispatch_optimal(const Instance& inst,
                                             std::int64_t howell_budget = kDefaultHowellBudget);

// One-supplier tables meeting each listed group (customer id = group id)
// with suppliers 1..s, coloured equitably with max(s, |groups|,
// ceil(s*|groups|/t)) colours; one dinner per colour.
std::vector<Dinner> sigma1_group_dinners(int s, const std::vector<int>& groups, int t);

// Replaces customer k of a grouped schedule (one customer per group) by
// the members of group k of group_customers(original.c, original.gamma).
Schedule expand_customer_groups(const Schedule& grouped, const Instance& original);

}  // namespace dinner

#include "dinner/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <string>
#include <vector>

#include "dinner/bounds.hpp"
#include "dinner/transforms.hpp"

namespace dinner {

const char* to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::FeasibleOnly: return "FeasibleOnly";
    case SolveStatus::InfeasibleAtBound: return "Infeasible_at_bound";
    case SolveStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

const char* to_string(Certificate cert)
{
    switch (cert) {
    case Certificate::Optimal: return "Optimal";
    case Certificate::Improvable: return "Improvable";
    case Certificate::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::int64_t default_node_budget(std::int64_t fallback)
{
    if (const char* env = std::getenv("DINNER_NODE_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return fallback;
}

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

inline Mask bit(int i) { return Mask{1} << i; }

// Subsets of `pool` with at most `room` elements, added to `base`,
// largest first. `compatible` filters candidate additions.
template <class Pred>
void subsets(Mask pool, int room, Mask base, Pred&& compatible, std::vector<Mask>& out)
{
    out.clear();
    std::vector<Mask> frontier{base};
    out.push_back(base);
    for (int size = 1; size <= room; ++size) {
        std::vector<Mask> next;
        for (Mask m : frontier) {
            // Extend only with elements above the highest one added so far.
            const Mask added = m & ~base;
            const Mask above = added ? ~((bit(63 - std::countl_zero(added)) << 1) - 1) : ~Mask{0};
            for (Mask rest = pool & above; rest; rest &= rest - 1) {
                const int x = std::countr_zero(rest);
                if (compatible(m, x))
                    next.push_back(m | bit(x));
            }
        }
        if (next.empty())
            break;
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::stable_sort(out.begin(), out.end(),
                     [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
}

struct Placement {
    int dinner;
    Mask suppliers, customers;
};

class Search {
public:
    Search(const Instance& inst, const SolveLimits& limits, std::int64_t& nodes, Clock::time_point deadline)
        : inst_(inst), limits_(limits), nodes_(nodes), deadline_(deadline)
    {
    }

    // 1 found, 0 refuted, -1 out of budget.
    int run(int dinners)
    {
        d_ = dinners;
        sup_left_.assign(inst_.s, inst_.c == 64 ? ~Mask{0} : bit(inst_.c) - 1);
        cust_left_.assign(inst_.c, inst_.s == 64 ? ~Mask{0} : bit(inst_.s) - 1);
        pair_free_.assign(inst_.s, 0);
        for (int i = 0; i < inst_.s; ++i)
            pair_free_[i] = (inst_.s == 64 ? ~Mask{0} : bit(inst_.s) - 1) & ~bit(i);
        sup_busy_.assign(dinners, 0);
        cust_busy_.assign(dinners, 0);
        tables_.assign(dinners, 0);
        used_ = 0;
        remaining_ = static_cast<std::int64_t>(inst_.s) * inst_.c;
        stack_.clear();
        aborted_ = false;
        const bool found = dfs();
        if (found)
            return 1;
        return aborted_ ? -1 : 0;
    }

    Schedule witness() const
    {
        Schedule out{inst_, std::vector<Dinner>(static_cast<std::size_t>(used_))};
        for (const auto& p : stack_) {
            TableSeating ts;
            for (Mask m = p.suppliers; m; m &= m - 1)
                ts.suppliers.push_back(std::countr_zero(m) + 1);
            for (Mask m = p.customers; m; m &= m - 1)
                ts.customers.push_back(std::countr_zero(m) + 1);
            out.dinners[p.dinner].tables.push_back(std::move(ts));
        }
        return out;
    }

private:
    bool tick()
    {
        ++nodes_;
        if (nodes_ > limits_.node_budget || ((nodes_ & 1023) == 0 && Clock::now() > deadline_)) {
            aborted_ = true;
            return false;
        }
        return true;
    }

    bool open(int d) const { return tables_[d] < inst_.t; }

    // Each unmet pair needs a table in a dinner where both sides are still
    // free; count what the open dinners can still hold.
    bool capacity_ok() const
    {
        const Mask sup_pending = pending_suppliers(), cust_pending = pending_customers();
        std::int64_t room = 0;
        for (int d = 0; d < d_; ++d) {
            if (!open(d))
                continue;
            const std::int64_t by_tables = static_cast<std::int64_t>(inst_.t - tables_[d]) * inst_.sigma * inst_.gamma;
            const std::int64_t by_people = static_cast<std::int64_t>(std::popcount(sup_pending & ~sup_busy_[d])) *
                                           std::popcount(cust_pending & ~cust_busy_[d]);
            room += std::min(by_tables, by_people);
        }
        if (room < remaining_)
            return false;
        for (int k = 0; k < inst_.c; ++k) {
            const int need = std::popcount(cust_left_[k]);
            if (need == 0)
                continue;
            int slots = 0;
            for (int d = 0; d < d_; ++d)
                slots += open(d) && !(cust_busy_[d] & bit(k));
            if (need > slots * inst_.sigma)
                return false;
        }
        for (int i = 0; i < inst_.s; ++i) {
            const int need = std::popcount(sup_left_[i]);
            if (need == 0)
                continue;
            int slots = 0;
            for (int d = 0; d < d_; ++d)
                slots += open(d) && !(sup_busy_[d] & bit(i));
            if (need > slots * inst_.gamma)
                return false;
        }
        return true;
    }

    Mask pending_suppliers() const
    {
        Mask m = 0;
        for (int i = 0; i < inst_.s; ++i)
            if (sup_left_[i])
                m |= bit(i);
        return m;
    }

    Mask pending_customers() const
    {
        Mask m = 0;
        for (int k = 0; k < inst_.c; ++k)
            if (cust_left_[k])
                m |= bit(k);
        return m;
    }

    void place(int d, Mask S, Mask C, int delta)
    {
        for (Mask a = S; a; a &= a - 1) {
            const int x = std::countr_zero(a);
            sup_left_[x] ^= C;
            pair_free_[x] ^= S & ~bit(x);
        }
        for (Mask b = C; b; b &= b - 1)
            cust_left_[std::countr_zero(b)] ^= S;
        sup_busy_[d] ^= S;
        cust_busy_[d] ^= C;
        tables_[d] += delta;
        remaining_ -= delta * static_cast<std::int64_t>(std::popcount(S)) * std::popcount(C);
    }

    bool dfs()
    {
        if (remaining_ == 0)
            return true;
        if (!tick())
            return false;
        if (limits_.pruning && !capacity_ok())
            return false;

        int i = 0;
        while (sup_left_[i] == 0)
            ++i;
        const int k = std::countr_zero(sup_left_[i]);

        std::vector<Mask> sup_sets, cust_sets;
        const int last = std::min(used_, d_ - 1);
        for (int d = 0; d <= last; ++d) {
            if (!open(d) || (sup_busy_[d] & bit(i)) || (cust_busy_[d] & bit(k)))
                continue;
            const Mask sup_pool = ~sup_busy_[d] & cust_left_[k] & pair_free_[i];
            subsets(sup_pool, inst_.sigma - 1, bit(i),
                    [&](Mask cur, int x) { return (pair_free_[x] & cur) == cur; }, sup_sets);
            for (Mask S : sup_sets) {
                Mask cust_pool = ~cust_busy_[d] & ~bit(k) & (inst_.c == 64 ? ~Mask{0} : bit(inst_.c) - 1);
                for (Mask a = S; a; a &= a - 1)
                    cust_pool &= sup_left_[std::countr_zero(a)];
                subsets(cust_pool, inst_.gamma - 1, bit(k), [](Mask, int) { return true; }, cust_sets);
                for (Mask C : cust_sets) {
                    const bool fresh = d == used_;
                    place(d, S, C, +1);
                    used_ += fresh;
                    stack_.push_back({d, S, C});
                    if (dfs())
                        return true;
                    stack_.pop_back();
                    used_ -= fresh;
                    place(d, S, C, -1);
                    if (aborted_)
                        return false;
                }
            }
        }
        return false;
    }

    const Instance& inst_;
    const SolveLimits& limits_;
    std::int64_t& nodes_;
    Clock::time_point deadline_;
    int d_ = 0;
    int used_ = 0;
    bool aborted_ = false;
    std::int64_t remaining_ = 0;
    std::vector<Mask> sup_left_, cust_left_, pair_free_;
    std::vector<Mask> sup_busy_, cust_busy_;
    std::vector<int> tables_;
    std::vector<Placement> stack_;
};

}  // namespace

SolveResult solve_exact(const Instance& inst, const SolveLimits& limits)
{
    require_valid(inst);
    if (inst.s > 64 || inst.c > 64)
        throw PreconditionError("exact solver handles at most 64 suppliers and 64 customers, got " + to_string(inst));

    SolveResult res;
    const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                             std::chrono::duration<double>(limits.time_budget));
    const int start = limits.pruning ? static_cast<int>(std::max<std::int64_t>(1, lb_best(inst))) : 1;
    res.lower_bound = start;
    Search search(inst, limits, res.nodes, deadline);
    for (int d = start; d <= limits.max_dinners; ++d) {
        const int outcome = search.run(d);
        if (outcome == 1) {
            res.status = SolveStatus::Optimal;
            res.witness = search.witness();
            res.value = res.witness->dinner_count();
            return res;
        }
        if (outcome == -1) {
            if (limits.fallback_witness) {
                BestBuild best = best_feasible(inst);
                res.status = SolveStatus::FeasibleOnly;
                res.value = best.dinner_count();
                res.witness = std::move(best.schedule);
            } else {
                res.status = SolveStatus::BudgetExhausted;
            }
            return res;
        }
        res.lower_bound = d + 1;
    }
    res.status = SolveStatus::InfeasibleAtBound;
    return res;
}

Certificate certify_optimal(const Schedule& sched, const SolveLimits& limits)
{
    if (!validate_schedule(sched).feasible)
        throw std::invalid_argument("certify_optimal: schedule is not feasible");
    SolveLimits probe = limits;
    probe.max_dinners = sched.dinner_count() - 1;
    probe.fallback_witness = false;
    const SolveResult res = solve_exact(sched.instance, probe);
    switch (res.status) {
    case SolveStatus::InfeasibleAtBound: return Certificate::Optimal;
    case SolveStatus::Optimal: return Certificate::Improvable;
    default: return Certificate::Inconclusive;
    }
}

}  // namespace dinner

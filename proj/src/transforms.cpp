#include "dinner/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dinner/bounds.hpp"
#include "dinner/constructions.hpp"

namespace dinner {

Schedule split_tables(const Schedule& sched, int t1)
{
    if (t1 < 1)
        throw std::invalid_argument("split_tables: t1 must be >= 1");
    Schedule out{sched.instance, {}};
    out.instance.t = t1;
    for (const auto& d : sched.dinners) {
        for (std::size_t first = 0; first < d.tables.size(); first += static_cast<std::size_t>(t1)) {
            const auto last = std::min(d.tables.size(), first + static_cast<std::size_t>(t1));
            out.dinners.push_back(Dinner{{d.tables.begin() + static_cast<std::ptrdiff_t>(first),
                                          d.tables.begin() + static_cast<std::ptrdiff_t>(last)}});
        }
    }
    return out;
}

Schedule split_sigma(const Schedule& sched, int sigma1)
{
    if (sigma1 < 1)
        throw std::invalid_argument("split_sigma: sigma1 must be >= 1");
    Schedule out{sched.instance, {}};
    out.instance.sigma = sigma1;
    for (const auto& d : sched.dinners) {
        std::size_t widest = 0;
        for (const auto& ts : d.tables)
            widest = std::max(widest, ts.suppliers.size());
        for (std::size_t first = 0; first < widest; first += static_cast<std::size_t>(sigma1)) {
            Dinner copy;
            for (const auto& ts : d.tables) {
                if (first >= ts.suppliers.size())
                    continue;
                std::vector<int> ids = ts.suppliers;
                std::sort(ids.begin(), ids.end());
                const auto last = std::min(ids.size(), first + static_cast<std::size_t>(sigma1));
                copy.tables.push_back(TableSeating{{ids.begin() + static_cast<std::ptrdiff_t>(first),
                                                    ids.begin() + static_cast<std::ptrdiff_t>(last)},
                                                   ts.customers});
            }
            if (!copy.tables.empty())
                out.dinners.push_back(std::move(copy));
        }
    }
    return out;
}

GammaGrouping group_gamma(const Instance& inst, int gamma1)
{
    require_valid(inst);
    if (gamma1 < 1 || gamma1 > inst.gamma)
        throw PreconditionError("group_gamma needs 1 <= gamma1 <= gamma, got gamma1 = " + std::to_string(gamma1) +
                                " for " + to_string(inst));
    GammaGrouping g;
    g.original = inst;
    g.derived = Instance{inst.t, inst.s, static_cast<int>(ceil_div(inst.c, gamma1)), inst.sigma, inst.gamma / gamma1};
    g.grouping = group_customers(inst.c, gamma1);
    return g;
}

Schedule GammaGrouping::expand(const Schedule& derived_schedule) const
{
    Schedule out{original, {}};
    for (const auto& d : derived_schedule.dinners) {
        Dinner nd;
        for (const auto& ts : d.tables) {
            TableSeating nt{ts.suppliers, {}};
            for (int k : ts.customers) {
                if (k < 1 || k > grouping.size())
                    throw std::out_of_range("group_gamma expansion: super-customer " + std::to_string(k));
                const auto& members = grouping.groups[static_cast<std::size_t>(k) - 1];
                nt.customers.insert(nt.customers.end(), members.begin(), members.end());
            }
            std::sort(nt.customers.begin(), nt.customers.end());
            nd.tables.push_back(std::move(nt));
        }
        out.dinners.push_back(std::move(nd));
    }
    return out;
}

Schedule concat_suppliers(const Schedule& first, const Schedule& second)
{
    const Instance& a = first.instance;
    const Instance& b = second.instance;
    if (a.t != b.t || a.c != b.c || a.sigma != b.sigma || a.gamma != b.gamma)
        throw PreconditionError("concat_suppliers: " + to_string(a) + " and " + to_string(b) +
                                " differ outside s");
    Schedule out = first;
    out.instance.s = a.s + b.s;
    for (const auto& d : second.dinners) {
        Dinner nd = d;
        for (auto& ts : nd.tables)
            for (int& x : ts.suppliers)
                x += a.s;
        out.dinners.push_back(std::move(nd));
    }
    return out;
}

Schedule concat_suppliers(std::span<const Schedule> parts)
{
    if (parts.empty())
        throw std::invalid_argument("concat_suppliers: nothing to concatenate");
    Schedule out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        out = concat_suppliers(out, parts[i]);
    return out;
}

namespace {

// Grouped base on `tables` tables with sigma = 2, or nothing when the
// Howell route cannot run there.
std::optional<Schedule> sigma2_base(const Instance& grouped, int tables, std::int64_t howell_budget)
{
    Instance base{tables, grouped.s, grouped.c, 2, 1};
    try {
        return build_howell_schedule(base, howell_budget);
    } catch (const PreconditionError&) {
    } catch (const SearchBudgetExhausted&) {
    }
    return std::nullopt;
}

Schedule finish_ub1(Schedule base, const Instance& inst)
{
    base = split_sigma(base, inst.sigma);
    base = split_tables(base, inst.t);
    return expand_customer_groups(base, inst);
}

}  // namespace

PipelineBuild build_ub1(const Instance& inst, std::int64_t howell_budget)
{
    require_valid(inst);
    const int cg = customer_groups(inst);
    const Instance grouped{inst.t, inst.s, cg, inst.sigma, 1};
    const int t2 = std::min(cg, inst.s);

    std::optional<Schedule> base;
    if (static_cast<std::int64_t>(inst.s) * inst.gamma > inst.c) {
        base = sigma2_base(grouped, t2, howell_budget);
    }
    if (!base) {
        std::vector<int> groups(static_cast<std::size_t>(cg));
        std::iota(groups.begin(), groups.end(), 1);
        base = Schedule{Instance{t2, inst.s, cg, 2, 1}, sigma1_group_dinners(inst.s, groups, t2)};
    }
    PipelineBuild out{finish_ub1(*base, inst), true};

    if (static_cast<std::int64_t>(inst.s) * inst.gamma > inst.c) {
        const int t2i = std::min(cg, static_cast<int>(ceil_div(inst.s, 2)));
        if (auto improved = sigma2_base(grouped, t2i, howell_budget)) {
            Schedule alt = finish_ub1(*improved, inst);
            if (alt.dinner_count() < out.schedule.dinner_count())
                out.schedule = std::move(alt);
        }
    }
    out.within_bound = out.schedule.dinner_count() <= ub1(inst);
    return out;
}

Schedule build_ub2(const Instance& inst)
{
    require_valid(inst);
    const int cg = customer_groups(inst);
    const int tp = static_cast<int>(ceil_div(inst.s, inst.sigma));
    if (tp > cg)
        throw PreconditionError("ub2 construction needs ceil(s/sigma) <= ceil(c/gamma), got " + to_string(inst));
    const int sigma = inst.sigma;
    auto supplier = [&](int block, int m) { return (block - 1) * sigma + m; };  // may exceed s

    Schedule grouped{Instance{tp, inst.s, cg, sigma, 1}, {}};
    Dinner first;
    for (int g = 1; g <= tp; ++g) {
        TableSeating ts;
        for (int m = 1; m <= sigma; ++m)
            ts.suppliers.push_back(supplier(g, m));
        ts.customers = {g};
        first.tables.push_back(std::move(ts));
    }
    grouped.dinners.push_back(std::move(first));
    for (int d = 1; d < tp; ++d) {
        for (int m = 1; m <= sigma; ++m) {
            Dinner evening;
            for (int g = 1; g <= tp; ++g)
                evening.tables.push_back(TableSeating{{supplier((g - 1 + d) % tp + 1, m)}, {g}});
            grouped.dinners.push_back(std::move(evening));
        }
    }
    std::vector<int> rest;
    for (int g = tp + 1; g <= cg; ++g)
        rest.push_back(g);
    for (auto& d : sigma1_group_dinners(inst.s, rest, tp))
        grouped.dinners.push_back(std::move(d));

    // Drop the padding suppliers, then fit the t' tables into t.
    for (auto& d : grouped.dinners)
        for (auto& ts : d.tables)
            std::erase_if(ts.suppliers, [&](int x) { return x > inst.s; });
    normalize(grouped);
    grouped = split_tables(grouped, inst.t);
    return expand_customer_groups(grouped, inst);
}

Schedule build_eucli(const Instance& inst)
{
    require_valid(inst);
    const std::int64_t cg = customer_groups(inst);
    const std::int64_t blocks = ceil_div(inst.s, inst.sigma);
    const std::int64_t q = blocks / cg;
    const std::int64_t full = inst.sigma * cg;

    std::vector<Schedule> parts;
    int remaining = inst.s;
    for (std::int64_t i = 0; i < q && remaining > 0; ++i) {
        const int size = static_cast<int>(std::min<std::int64_t>(full, remaining));
        parts.push_back(build_ub2(Instance{inst.t, size, inst.c, inst.sigma, inst.gamma}));
        remaining -= size;
    }
    if (remaining > 0)
        parts.push_back(build_ub2(Instance{inst.t, remaining, inst.c, inst.sigma, inst.gamma}));
    return concat_suppliers(parts);
}

BestBuild best_feasible(const Instance& inst, std::int64_t howell_budget)
{
    require_valid(inst);
    std::optional<BestBuild> best;
    auto offer = [&](Schedule sched, const char* strategy, bool proven) {
        if (!best || sched.dinner_count() < best->dinner_count())
            best = BestBuild{std::move(sched), strategy, proven};
    };
    if (auto opt = dispatch_optimal(inst, howell_budget))
        offer(std::move(opt->schedule), opt->strategy.c_str(), opt->proven_optimal);
    if (ceil_div(inst.s, inst.sigma) <= customer_groups(inst))
        offer(build_ub2(inst), "ub2", false);
    offer(build_ub1(inst, howell_budget).schedule, "ub1", false);
    offer(build_eucli(inst), "eucli", false);
    if (!best->proven_optimal && best->dinner_count() <= lb_best(inst))
        best->proven_optimal = true;
    return *best;
}

}  // namespace dinner

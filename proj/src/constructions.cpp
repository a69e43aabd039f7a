#include "dinner/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "dinner/bounds.hpp"

namespace dinner {

namespace {

using Cell = std::vector<int>;
using Grid = std::vector<std::vector<Cell>>;

// Grouped schedules use one pseudo-customer per group: customer id = group id.
Instance grouped_instance(const Instance& inst)
{
    return Instance{inst.t, inst.s, customer_groups(inst), inst.sigma, 1};
}

Dinner dinner_from_row(const std::vector<Cell>& row, int s)
{
    Dinner d;
    for (std::size_t g = 0; g < row.size(); ++g) {
        TableSeating ts;
        for (int x : row[g])
            if (x <= s)
                ts.suppliers.push_back(x);
        if (ts.suppliers.empty())
            continue;
        std::sort(ts.suppliers.begin(), ts.suppliers.end());
        ts.customers.push_back(static_cast<int>(g) + 1);
        d.tables.push_back(std::move(ts));
    }
    return d;
}

Schedule grouped_from_grid(const Grid& grid, const Instance& inst)
{
    Schedule out{grouped_instance(inst), {}};
    for (const auto& row : grid) {
        Dinner d = dinner_from_row(row, inst.s);
        if (!d.tables.empty())
            out.dinners.push_back(std::move(d));
    }
    return out;
}

int max_tables(const Schedule& sched)
{
    int w = 0;
    for (const auto& d : sched.dinners)
        w = std::max(w, static_cast<int>(d.tables.size()));
    return w;
}

bool howell_exception(int m, int n2)
{
    return (m == 2 && n2 == 4) || (m == 3 && n2 == 4) || (m == 5 && n2 == 6) || (m == 5 && n2 == 8);
}

ExceptionKey exception_key(int m, int n2)
{
    if (m == 2)
        return ExceptionKey::S4C2;
    if (m == 3)
        return ExceptionKey::S4C3;
    return n2 == 6 ? ExceptionKey::S6C5 : ExceptionKey::S8C5;
}

// Width of a template once suppliers above s are dropped.
int stripped_width(const ScheduleTemplate& tpl, int s)
{
    int w = 0;
    for (const auto& row : tpl.grid) {
        int used = 0;
        for (const auto& cell : row)
            used += std::any_of(cell.begin(), cell.end(), [&](int x) { return x <= s; });
        w = std::max(w, used);
    }
    return w;
}

int stripped_rows(const ScheduleTemplate& tpl, int s)
{
    int rows = 0;
    for (const auto& row : tpl.grid)
        rows += std::any_of(row.begin(), row.end(),
                            [&](const Cell& cell) { return std::any_of(cell.begin(), cell.end(), [&](int x) { return x <= s; }); });
    return rows;
}

Grid grid_from_howell(const HowellDesign& h, int columns)
{
    Grid grid(static_cast<std::size_t>(h.m), std::vector<Cell>(static_cast<std::size_t>(columns)));
    for (int r = 0; r < h.m; ++r)
        for (int c = 0; c < columns; ++c)
            if (const auto& cell = h.at(r, c))
                grid[r][c] = {cell->first, cell->second};
    return grid;
}

}  // namespace

std::vector<Dinner> sigma1_group_dinners(int s, const std::vector<int>& groups, int t)
{
    if (groups.empty())
        return {};
    const int g = static_cast<int>(groups.size());
    const auto k = static_cast<int>(std::max<std::int64_t>({s, g, ceil_div(std::int64_t{s} * g, t)}));
    EdgeColoring col = equitable_bipartite_coloring(s, g, k);
    std::vector<Dinner> out(static_cast<std::size_t>(k));
    for (std::size_t e = 0; e < col.edges.size(); ++e) {
        auto [i, j] = col.edges[e];
        out[col.colors[e]].tables.push_back(TableSeating{{i + 1}, {groups[j]}});
    }
    return out;
}

Schedule expand_customer_groups(const Schedule& grouped, const Instance& original)
{
    const CustomerGrouping grouping = group_customers(original.c, original.gamma);
    Schedule out{original, {}};
    out.dinners.reserve(grouped.dinners.size());
    for (const auto& d : grouped.dinners) {
        Dinner nd;
        for (const auto& ts : d.tables) {
            TableSeating nt{ts.suppliers, {}};
            for (int k : ts.customers) {
                if (k < 1 || k > grouping.size())
                    throw std::out_of_range("expand_customer_groups: group id " + std::to_string(k));
                const auto& members = grouping.groups[k - 1];
                nt.customers.insert(nt.customers.end(), members.begin(), members.end());
            }
            nd.tables.push_back(std::move(nt));
        }
        out.dinners.push_back(std::move(nd));
    }
    normalize(out);
    return out;
}

Schedule build_trivial(const Instance& inst)
{
    require_valid(inst);
    if (inst.c > inst.gamma)
        throw PreconditionError("trivial construction needs c <= gamma, got " + to_string(inst));
    Schedule out{inst, {}};
    std::vector<int> everyone(static_cast<std::size_t>(inst.c));
    std::iota(everyone.begin(), everyone.end(), 1);
    for (int first = 1; first <= inst.s; first += inst.sigma) {
        TableSeating ts;
        for (int x = first; x <= std::min(inst.s, first + inst.sigma - 1); ++x)
            ts.suppliers.push_back(x);
        ts.customers = everyone;
        out.dinners.push_back(Dinner{{std::move(ts)}});
    }
    return out;
}

Schedule build_sigma1(const Instance& inst)
{
    require_valid(inst);
    if (inst.sigma != 1)
        throw PreconditionError("sigma=1 construction needs sigma = 1, got " + to_string(inst));
    const int cg = customer_groups(inst);
    std::vector<int> groups(static_cast<std::size_t>(cg));
    std::iota(groups.begin(), groups.end(), 1);
    Schedule grouped{grouped_instance(inst), sigma1_group_dinners(inst.s, groups, inst.t)};
    return expand_customer_groups(grouped, inst);
}

const char* to_string(ExceptionKey key)
{
    switch (key) {
    case ExceptionKey::S4C3: return "S4C3";
    case ExceptionKey::S6C5: return "S6C5";
    case ExceptionKey::S8C5: return "S8C5";
    case ExceptionKey::S4C2: return "S4C2";
    }
    return "?";
}

ScheduleTemplate exceptional_schedule(ExceptionKey key)
{
    switch (key) {
    case ExceptionKey::S4C3:
        return {"S4C3", 4, 3,
                {{{1, 2}, {3, 4}, {}},
                 {{3}, {1}, {2, 4}},
                 {{4}, {2}, {1, 3}}}};
    case ExceptionKey::S6C5:
        return {"S6C5", 6, 5,
                {{{}, {6}, {2, 3}, {4, 5}, {1}},
                 {{6}, {3, 4}, {1}, {2}, {5}},
                 {{3, 5}, {1, 2}, {}, {6}, {4}},
                 {{2, 4}, {}, {5}, {1}, {3, 6}},
                 {{1}, {5}, {4, 6}, {3}, {2}}}};
    case ExceptionKey::S8C5:
        return {"S8C5", 8, 5,
                {{{4}, {6}, {1, 5}, {7, 8}, {2, 3}},
                 {{2, 6}, {5, 7}, {3}, {1}, {4, 8}},
                 {{7}, {1, 3}, {2, 8}, {4, 5}, {6}},
                 {{1, 8}, {2, 4}, {7}, {3}, {5}},
                 {{3, 5}, {8}, {4, 6}, {2}, {1, 7}}}};
    case ExceptionKey::S4C2:
        return {"S4C2", 4, 2,
                {{{1, 2}, {3, 4}},
                 {{3}, {1}},
                 {{4}, {2}}}};
    }
    throw std::invalid_argument("unknown exception key");
}

ScheduleTemplate repaired_exceptional_schedule(ExceptionKey key)
{
    ScheduleTemplate tpl = exceptional_schedule(key);
    if (key == ExceptionKey::S8C5)
        tpl.grid[3][3] = {3, 6};
    return tpl;
}

Schedule schedule_from_template(const ScheduleTemplate& tpl, const Instance& inst)
{
    require_valid(inst);
    if (tpl.groups != customer_groups(inst))
        throw PreconditionError("template " + tpl.name + " has " + std::to_string(tpl.groups) +
                                " groups but the instance has " + std::to_string(customer_groups(inst)));
    if (tpl.suppliers < inst.s)
        throw PreconditionError("template " + tpl.name + " covers only " + std::to_string(tpl.suppliers) +
                                " suppliers");
    return expand_customer_groups(grouped_from_grid(tpl.grid, inst), inst);
}

std::optional<int> sigma2_route_dinners(int s, int cg, int tables)
{
    if (s < 1 || cg < 1 || cg > s || tables < 1)
        return std::nullopt;
    if (cg == 1)
        return static_cast<int>(ceil_div(s, 2));
    if (s % 2 == 0 && cg == s)
        return std::nullopt;
    const int n2 = s + s % 2, n = n2 / 2;
    if (2 * cg >= s) {
        if (howell_exception(cg, n2)) {
            const ScheduleTemplate tpl = repaired_exceptional_schedule(exception_key(cg, n2));
            if (stripped_width(tpl, s) > tables)
                return std::nullopt;
            return stripped_rows(tpl, s);
        }
        return n <= tables ? std::optional<int>(cg) : std::nullopt;
    }
    return cg <= tables ? std::optional<int>(n) : std::nullopt;
}

Schedule build_howell_schedule(const Instance& inst, std::int64_t howell_budget)
{
    require_valid(inst);
    const int cg = customer_groups(inst);
    const int half = static_cast<int>(ceil_div(inst.s, 2));
    if (inst.sigma != 2 || static_cast<std::int64_t>(inst.s) * inst.gamma <= inst.c || inst.t < std::min(cg, half))
        throw PreconditionError("Howell construction needs sigma = 2, s*gamma > c and t >= min(ceil(c/gamma), "
                                "ceil(s/2)), got " + to_string(inst));
    if (inst.s % 2 == 0 && cg == inst.s)
        throw PreconditionError("Howell construction has no design for an even s equal to ceil(c/gamma), got " +
                                to_string(inst));

    const int n2 = inst.s + inst.s % 2, n = n2 / 2;
    Grid grid;
    if (cg == 1) {
        for (int x = 1; x <= inst.s; x += 2)
            grid.push_back({{x, x + 1}});
    } else if (2 * cg >= inst.s) {
        if (howell_exception(cg, n2)) {
            grid = repaired_exceptional_schedule(exception_key(cg, n2)).grid;
        } else {
            auto h = generate_howell(cg, n2, howell_budget);
            grid = grid_from_howell(*h, cg);
        }
    } else {
        auto h = generate_howell(n, n2, howell_budget);
        grid = grid_from_howell(*h, cg);
    }

    Schedule grouped = grouped_from_grid(grid, inst);
    if (max_tables(grouped) > inst.t)
        throw PreconditionError("Howell construction for " + to_string(inst) + " needs " +
                                std::to_string(max_tables(grouped)) + " tables");
    return expand_customer_groups(grouped, inst);
}

std::int64_t cas_par_dinners(const Instance& inst)
{
    const std::int64_t cg = customer_groups(inst), s = inst.s, t = inst.t;
    if (s % 2 == 0)
        return 2 * cg - s + 1;
    return ceil_div(cg * s + 3 * t - 1 - 2 * t * t, t);
}

namespace {

struct PairItem {
    int group;
    int a, b;
};

struct SingleItem {
    int group;
    int supplier;
};

// Packs the one-factor pairs and the single meetings of the cas-par case
// without a Room square: pair dinners carry up to q pairs and are topped
// up with singles; the leftover singles are coloured equitably.
std::vector<Dinner> cas_par_packing(int s, int cg, int t, int q)
{
    const int sp = s + s % 2;
    std::vector<PairItem> pairs;
    std::vector<SingleItem> singles;
    auto add = [&](int g, int x, int y) {
        const int a = std::min(x, y) + 1, b = std::max(x, y) + 1;
        if (b <= s)
            pairs.push_back({g, a, b});
        else
            singles.push_back({g, a});
    };
    // Round-robin one-factorisation of K_{sp}; factor r goes to group r+1.
    for (int r = 0; r + 1 < sp; ++r) {
        add(r + 1, sp - 1, r);
        for (int k = 1; k < sp / 2; ++k)
            add(r + 1, (r + k) % (sp - 1), (r - k + sp - 1) % (sp - 1));
    }
    for (int g = sp; g <= cg; ++g)
        for (int x = 1; x <= s; ++x)
            singles.push_back({g, x});

    struct Open {
        Dinner dinner;
        std::set<int> suppliers, groups;
    };
    std::vector<Open> open;
    for (const auto& p : pairs) {
        bool placed = false;
        for (auto& o : open) {
            if (static_cast<int>(o.dinner.tables.size()) >= q || o.groups.count(p.group) ||
                o.suppliers.count(p.a) || o.suppliers.count(p.b))
                continue;
            o.dinner.tables.push_back({{p.a, p.b}, {p.group}});
            o.suppliers.insert({p.a, p.b});
            o.groups.insert(p.group);
            placed = true;
            break;
        }
        if (!placed) {
            Open o;
            o.dinner.tables.push_back({{p.a, p.b}, {p.group}});
            o.suppliers = {p.a, p.b};
            o.groups = {p.group};
            open.push_back(std::move(o));
        }
    }

    // Top up each pair dinner with the singles whose endpoints carry the most
    // remaining meetings, so the leftover graph keeps a small maximum degree.
    std::vector<int> deg_group(static_cast<std::size_t>(cg) + 1, 0), deg_supplier(static_cast<std::size_t>(s) + 1, 0);
    for (const auto& it : singles) {
        ++deg_group[it.group];
        ++deg_supplier[it.supplier];
    }
    std::vector<bool> used(singles.size(), false);
    for (auto& o : open) {
        while (static_cast<int>(o.dinner.tables.size()) < t) {
            int best = -1, best_score = -1;
            for (std::size_t i = 0; i < singles.size(); ++i) {
                const auto& it = singles[i];
                if (used[i] || o.groups.count(it.group) || o.suppliers.count(it.supplier))
                    continue;
                const int score = deg_group[it.group] + deg_supplier[it.supplier];
                if (score > best_score) {
                    best = static_cast<int>(i);
                    best_score = score;
                }
            }
            if (best < 0)
                break;
            const auto& it = singles[static_cast<std::size_t>(best)];
            used[static_cast<std::size_t>(best)] = true;
            --deg_group[it.group];
            --deg_supplier[it.supplier];
            o.dinner.tables.push_back({{it.supplier}, {it.group}});
            o.suppliers.insert(it.supplier);
            o.groups.insert(it.group);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < singles.size(); ++i)
        if (!used[i])
            edges.emplace_back(singles[i].supplier - 1, singles[i].group - 1);
    std::vector<Dinner> out;
    for (auto& o : open)
        out.push_back(std::move(o.dinner));
    if (!edges.empty()) {
        const int delta = std::max(*std::max_element(deg_group.begin(), deg_group.end()),
                                   *std::max_element(deg_supplier.begin(), deg_supplier.end()));
        const auto k = static_cast<int>(std::max<std::int64_t>(delta, ceil_div(static_cast<std::int64_t>(edges.size()), t)));
        EdgeColoring col = equitable_edge_coloring(s, cg, edges, k);
        std::vector<Dinner> extra(static_cast<std::size_t>(k));
        for (std::size_t e = 0; e < col.edges.size(); ++e)
            extra[col.colors[e]].tables.push_back({{col.edges[e].first + 1}, {col.edges[e].second + 1}});
        for (auto& d : extra)
            out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

Schedule build_cas_par(const Instance& inst, std::int64_t howell_budget)
{
    require_valid(inst);
    const int cg = customer_groups(inst);
    if (inst.sigma != 2 || inst.t != ceil_div(inst.s, 2) || 2 * static_cast<std::int64_t>(cg) < 3 * inst.s)
        throw PreconditionError("cas-par construction needs sigma = 2, t = ceil(s/2) and ceil(c/gamma) >= 3s/2, got " +
                                to_string(inst));

    const int s = inst.s, sp = s + s % 2;
    const std::int64_t target = cas_par_dinners(inst);
    Schedule grouped{grouped_instance(inst), {}};

    bool room_square = howell_exists(sp - 1, sp);
    if (room_square) {
        try {
            auto h = generate_howell(sp - 1, sp, howell_budget);
            grouped = grouped_from_grid(grid_from_howell(*h, sp - 1), inst);
        } catch (const SearchBudgetExhausted&) {
            room_square = false;
        }
    }
    if (room_square) {
        std::vector<int> rest;
        for (int g = sp; g <= cg; ++g)
            rest.push_back(g);
        for (auto& d : sigma1_group_dinners(s, rest, inst.t))
            grouped.dinners.push_back(std::move(d));
    } else {
        std::optional<std::vector<Dinner>> best;
        for (int q = 1; q <= inst.t; ++q) {
            auto packed = cas_par_packing(s, cg, inst.t, q);
            if (!best || packed.size() < best->size())
                best = std::move(packed);
        }
        grouped.dinners = std::move(*best);
    }
    if (grouped.dinner_count() > target)
        throw std::logic_error("cas-par construction used " + std::to_string(grouped.dinner_count()) +
                               " dinners, expected " + std::to_string(target) + " for " + to_string(inst));
    return expand_customer_groups(grouped, inst);
}

bool is_prime(int p)
{
    if (p < 2)
        return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

namespace {

int prime_root(int s)
{
    const int p = static_cast<int>(isqrt_floor(static_cast<unsigned __int128>(s)));
    return p * p == s && is_prime(p) ? p : 0;
}

}  // namespace

Schedule build_prime(const Instance& inst)
{
    require_valid(inst);
    const int p = prime_root(inst.s);
    if (inst.t != 1 || inst.gamma != 1 || p == 0 || inst.c > p || p > inst.sigma)
        throw PreconditionError("prime construction needs t = gamma = 1, s = p^2 with p prime and c <= p <= sigma, got " +
                                to_string(inst));
    Schedule out{inst, {}};
    const int s = p * p;
    for (int k = 1; k <= inst.c; ++k) {
        for (int i = 1; i <= p; ++i) {
            TableSeating ts;
            for (int j = 1; j <= p; ++j) {
                const int v = (j + p * ((k - 1) * (j - 1) + i - 1)) % s;
                ts.suppliers.push_back(v == 0 ? s : v);
            }
            std::sort(ts.suppliers.begin(), ts.suppliers.end());
            ts.customers = {k};
            out.dinners.push_back(Dinner{{std::move(ts)}});
        }
    }
    return out;
}

std::optional<OptimalBuild> dispatch_optimal(const Instance& inst, std::int64_t howell_budget)
{
    require_valid(inst);
    const int cg = customer_groups(inst);
    const int half = static_cast<int>(ceil_div(inst.s, 2));
    std::optional<OptimalBuild> out;
    if (inst.c <= inst.gamma)
        out = OptimalBuild{build_trivial(inst), "trivial"};
    else if (inst.sigma == 1)
        out = OptimalBuild{build_sigma1(inst), "sigma1"};
    else if (inst.t == 1 && inst.gamma == 1 && prime_root(inst.s) != 0 && inst.c <= prime_root(inst.s) &&
             prime_root(inst.s) <= inst.sigma)
        out = OptimalBuild{build_prime(inst), "prime"};
    else if (inst.sigma == 2 && static_cast<std::int64_t>(inst.s) * inst.gamma > inst.c &&
             inst.t >= std::min(cg, half) && !(inst.s % 2 == 0 && cg == inst.s) &&
             sigma2_route_dinners(inst.s, cg, inst.t)) {
        try {
            out = OptimalBuild{build_howell_schedule(inst, howell_budget), "howell"};
        } catch (const SearchBudgetExhausted&) {
            return std::nullopt;
        }
    } else if (inst.sigma == 2 && inst.t == half && 2 * static_cast<std::int64_t>(cg) >= 3 * inst.s)
        out = OptimalBuild{build_cas_par(inst, howell_budget), "caspar"};
    if (!out)
        return std::nullopt;
    out->proven_optimal = out->schedule.dinner_count() <= lb_best(inst) || (cg == 2 && inst.s == 4);
    return out;
}

}  // namespace dinner

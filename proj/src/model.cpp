#include "dinner/model.hpp"

#include <algorithm>
#include <sstream>

namespace dinner {

std::string to_string(const Instance& inst)
{
    std::ostringstream os;
    os << "(t=" << inst.t << ", s=" << inst.s << ", c=" << inst.c << ", sigma=" << inst.sigma
       << ", gamma=" << inst.gamma << ")";
    return os.str();
}

void require_valid(const Instance& inst)
{
    if (!inst.valid())
        throw std::invalid_argument("instance parameters must all be >= 1: " + to_string(inst));
}

const char* to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::TableCountExceeded: return "TableCountExceeded";
    case ViolationKind::SupplierCapExceeded: return "SupplierCapExceeded";
    case ViolationKind::CustomerCapExceeded: return "CustomerCapExceeded";
    case ViolationKind::PersonAtTwoTables: return "PersonAtTwoTables";
    case ViolationKind::PairMissing: return "PairMissing";
    case ViolationKind::PairRepeated: return "PairRepeated";
    case ViolationKind::SupplierPairRepeated: return "SupplierPairRepeated";
    case ViolationKind::IdOutOfRange: return "IdOutOfRange";
    }
    return "?";
}

std::size_t ValidationReport::count(ViolationKind kind) const
{
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; }));
}

bool ValidationReport::has(ViolationKind kind, const std::string& detail) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.kind == kind && v.detail == detail; });
}

int ScheduleTemplate::width() const
{
    int w = 0;
    for (const auto& row : grid)
        w = std::max(w, static_cast<int>(std::count_if(row.begin(), row.end(), [](const auto& cell) {
                         return !cell.empty();
                     })));
    return w;
}

CustomerGrouping group_customers(int c, int gamma)
{
    if (c < 1 || gamma < 1)
        throw std::invalid_argument("group_customers: c and gamma must be >= 1");
    CustomerGrouping g;
    for (int first = 1; first <= c; first += gamma) {
        std::vector<int> block;
        for (int k = first; k <= std::min(first + gamma - 1, c); ++k)
            block.push_back(k);
        g.groups.push_back(std::move(block));
    }
    return g;
}

namespace {

std::string where(std::size_t dinner, std::size_t table)
{
    return "dinner " + std::to_string(dinner + 1) + " table " + std::to_string(table + 1);
}

}  // namespace

ValidationReport validate_schedule(const Schedule& sched)
{
    ValidationReport rep;
    const Instance& inst = sched.instance;
    auto add = [&](ViolationKind k, std::string detail) { rep.violations.push_back({k, std::move(detail)}); };

    const int s = std::max(inst.s, 0);
    const int c = std::max(inst.c, 0);
    // met[i][k]: times supplier i sat with customer k; paired[i][j] likewise for suppliers.
    std::vector<int> met(static_cast<std::size_t>(s) * c, 0);
    std::vector<int> paired(static_cast<std::size_t>(s) * s, 0);

    for (std::size_t d = 0; d < sched.dinners.size(); ++d) {
        const Dinner& dn = sched.dinners[d];
        if (static_cast<int>(dn.tables.size()) > inst.t)
            add(ViolationKind::TableCountExceeded, "dinner " + std::to_string(d + 1) + " uses " +
                                                       std::to_string(dn.tables.size()) + " tables");
        std::vector<int> supplier_seen(static_cast<std::size_t>(s) + 1, 0);
        std::vector<int> customer_seen(static_cast<std::size_t>(c) + 1, 0);

        for (std::size_t ti = 0; ti < dn.tables.size(); ++ti) {
            const TableSeating& tb = dn.tables[ti];
            if (static_cast<int>(tb.suppliers.size()) > inst.sigma)
                add(ViolationKind::SupplierCapExceeded,
                    where(d, ti) + " seats " + std::to_string(tb.suppliers.size()) + " suppliers");
            if (static_cast<int>(tb.customers.size()) > inst.gamma)
                add(ViolationKind::CustomerCapExceeded,
                    where(d, ti) + " seats " + std::to_string(tb.customers.size()) + " customers");

            std::vector<int> sup, cus;
            for (int i : tb.suppliers) {
                if (i < 1 || i > s) {
                    add(ViolationKind::IdOutOfRange, "supplier " + std::to_string(i) + " at " + where(d, ti));
                    continue;
                }
                if (supplier_seen[i]++ > 0) {
                    add(ViolationKind::PersonAtTwoTables,
                        "supplier " + std::to_string(i) + " in dinner " + std::to_string(d + 1));
                    continue;
                }
                sup.push_back(i);
            }
            for (int k : tb.customers) {
                if (k < 1 || k > c) {
                    add(ViolationKind::IdOutOfRange, "customer " + std::to_string(k) + " at " + where(d, ti));
                    continue;
                }
                if (customer_seen[k]++ > 0) {
                    add(ViolationKind::PersonAtTwoTables,
                        "customer " + std::to_string(k) + " in dinner " + std::to_string(d + 1));
                    continue;
                }
                cus.push_back(k);
            }
            for (int i : sup)
                for (int k : cus)
                    ++met[static_cast<std::size_t>(i - 1) * c + (k - 1)];
            for (std::size_t a = 0; a < sup.size(); ++a)
                for (std::size_t b = a + 1; b < sup.size(); ++b) {
                    int lo = std::min(sup[a], sup[b]), hi = std::max(sup[a], sup[b]);
                    ++paired[static_cast<std::size_t>(lo - 1) * s + (hi - 1)];
                }
        }
    }

    for (int i = 1; i <= s; ++i)
        for (int k = 1; k <= c; ++k) {
            int n = met[static_cast<std::size_t>(i - 1) * c + (k - 1)];
            std::string pair = "supplier " + std::to_string(i) + ", customer " + std::to_string(k);
            if (n == 0)
                add(ViolationKind::PairMissing, pair);
            else if (n > 1)
                add(ViolationKind::PairRepeated, pair);
        }
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j)
            if (paired[static_cast<std::size_t>(i - 1) * s + (j - 1)] > 1)
                add(ViolationKind::SupplierPairRepeated,
                    "suppliers " + std::to_string(i) + " and " + std::to_string(j));

    rep.feasible = rep.violations.empty();
    return rep;
}

void normalize(Schedule& sched)
{
    for (Dinner& dn : sched.dinners) {
        for (TableSeating& tb : dn.tables) {
            std::sort(tb.suppliers.begin(), tb.suppliers.end());
            std::sort(tb.customers.begin(), tb.customers.end());
        }
        std::erase_if(dn.tables, [](const TableSeating& tb) { return tb.suppliers.empty() || tb.customers.empty(); });
    }
    std::erase_if(sched.dinners, [](const Dinner& dn) { return dn.tables.empty(); });
}

}  // namespace dinner

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dinner {

// Problem parameters: t tables, s suppliers, c customers, at most sigma
// suppliers and gamma customers per table.
struct Instance {
    int t = 1;
    int s = 1;
    int c = 1;
    int sigma = 1;
    int gamma = 1;

    bool valid() const { return t >= 1 && s >= 1 && c >= 1 && sigma >= 1 && gamma >= 1; }
    friend bool operator==(const Instance&, const Instance&) = default;
};

std::string to_string(const Instance& inst);

// Throws std::invalid_argument unless all five parameters are >= 1.
void require_valid(const Instance& inst);

// Ids are 1-based; both lists are kept sorted ascending.
struct TableSeating {
    std::vector<int> suppliers;
    std::vector<int> customers;

    friend bool operator==(const TableSeating&, const TableSeating&) = default;
};

struct Dinner {
    std::vector<TableSeating> tables;

    friend bool operator==(const Dinner&, const Dinner&) = default;
};

struct Schedule {
    Instance instance;
    std::vector<Dinner> dinners;

    int dinner_count() const { return static_cast<int>(dinners.size()); }
    friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Dinner x customer-group grid of supplier sets. An empty cell means the
// group does not eat that evening.
struct ScheduleTemplate {
    std::string name;
    int suppliers = 0;
    int groups = 0;
    std::vector<std::vector<std::vector<int>>> grid;

    int dinner_count() const { return static_cast<int>(grid.size()); }
    // Largest number of non-empty cells in one row.
    int width() const;
    friend bool operator==(const ScheduleTemplate&, const ScheduleTemplate&) = default;
};

struct CustomerGrouping {
    std::vector<std::vector<int>> groups;

    int size() const { return static_cast<int>(groups.size()); }
};

enum class ViolationKind {
    TableCountExceeded,
    SupplierCapExceeded,
    CustomerCapExceeded,
    PersonAtTwoTables,
    PairMissing,
    PairRepeated,
    SupplierPairRepeated,
    IdOutOfRange,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    bool feasible = true;
    std::vector<Violation> violations;

    std::size_t count(ViolationKind kind) const;
    bool has(ViolationKind kind, const std::string& detail) const;
};

// A construction was asked to run outside the parameter range it covers.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A bounded search ran out of nodes before reaching a conclusion.
class SearchBudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    // b > 0; a may be negative.
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline int customer_groups(const Instance& inst) { return static_cast<int>(ceil_div(inst.c, inst.gamma)); }

// Contiguous blocks: group k holds customers (k-1)*gamma+1 .. min(k*gamma, c).
CustomerGrouping group_customers(int c, int gamma);

// Checks table count, capacities, one seat per person per dinner, every
// supplier/customer pair met exactly once, supplier pairs met at most once,
// and id ranges. Every violation is reported.
ValidationReport validate_schedule(const Schedule& sched);

// Sorts id lists, drops tables without suppliers or customers and dinners
// without tables.
void normalize(Schedule& sched);

}  // namespace dinner

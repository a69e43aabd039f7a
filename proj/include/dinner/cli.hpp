#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "dinner/model.hpp"

namespace dinner::cli {

// Exit codes shared by every command.
enum Exit : int {
    kOk = 0,
    kFailure = 1,       // infeasible schedule, table mismatch, no solution within max dinners
    kBadInput = 2,      // invalid parameters or unreadable schedule file
    kPrecondition = 3,  // construction outside its parameter range
    kBuildBudget = 4,   // Howell search gave up during build
    kSolveBudget = 5,   // solver gave up without a proof
};

int cmd_bounds(const Instance& inst, bool json, std::ostream& out, std::ostream& err);

struct BuildOptions {
    std::string strategy = "auto";
    std::optional<std::string> out_path;  // "-" writes the schedule to `out`
    std::int64_t howell_budget = 50'000'000;
};

int cmd_build(const Instance& inst, const BuildOptions& opts, std::ostream& out, std::ostream& err);

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);

struct SolveOptions {
    std::int64_t node_budget = 50'000'000;
    double timeout = 60.0;
    int max_dinners = 64;
    std::optional<std::string> witness_path;
    bool json = false;
};

int cmd_solve(const Instance& inst, const SolveOptions& opts, std::ostream& out, std::ostream& err);

int cmd_paper_tables(std::ostream& out);

}  // namespace dinner::cli

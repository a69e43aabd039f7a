#include "dinner/cli.hpp"

#include <array>
#include <ostream>

#include "json.hpp"

#include "dinner/bounds.hpp"
#include "dinner/constructions.hpp"
#include "dinner/schedule_io.hpp"
#include "dinner/solver.hpp"
#include "dinner/transforms.hpp"

namespace dinner::cli {

namespace {

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "n/a"; }

bool check_instance(const Instance& inst, std::ostream& err)
{
    if (inst.valid())
        return true;
    err << "error: all parameters must be positive integers, got " << to_string(inst) << "\n";
    return false;
}

}  // namespace

int cmd_bounds(const Instance& inst, bool json, std::ostream& out, std::ostream& err)
{
    if (!check_instance(inst, err))
        return kBadInput;
    const BoundsReport r = compute_bounds(inst);
    if (json) {
        out << encode_bounds(r) << "\n";
        return kOk;
    }
    out << "instance " << to_string(inst) << "\n";
    out << "lb1 = " << r.lb1 << "\n";
    out << "lb2 = " << r.lb2 << "\n";
    out << "lb3 = " << r.lb3 << "\n";
    out << "lb4 = " << opt_str(r.lb4) << (r.lb4 ? "" : " (needs gamma < c)") << "\n";
    out << "lb5 = " << r.lb5;
    if (r.lb5_j > 0)
        out << " (attained at j = " << r.lb5_j << ")";
    out << "\n";
    out << "j*  = " << (r.j_star ? std::to_string(*r.j_star) : "n/a") << "\n";
    out << "ub1 = " << r.ub1 << (r.ub1_witnessed ? "" : " (no sigma=2 base here; not used)") << "\n";
    out << "ub1_improved = " << opt_str(r.ub1_improved);
    if (r.ub1_improved && !r.ub1_improved_witnessed)
        out << " (no sigma=2 base here; not used)";
    out << "\n";
    out << "ub2 = " << opt_str(r.ub2) << "\n";
    out << "ub_eucli = " << r.ub_eucli << "\n";
    out << "lb_best = " << r.lb_best << "\n";
    out << "ub_best = " << r.ub_best << "\n";
    return kOk;
}

int cmd_build(const Instance& inst, const BuildOptions& opts, std::ostream& out, std::ostream& err)
{
    if (!check_instance(inst, err))
        return kBadInput;
    const std::string& st = opts.strategy;
    try {
        Schedule sched;
        std::string used = st;
        bool proven = false;
        bool within = true;
        if (st == "auto") {
            BestBuild best = best_feasible(inst, opts.howell_budget);
            sched = std::move(best.schedule);
            used = "auto/" + best.strategy;
            proven = best.proven_optimal;
        } else if (st == "trivial") {
            sched = build_trivial(inst);
        } else if (st == "sigma1") {
            sched = build_sigma1(inst);
        } else if (st == "howell") {
            sched = build_howell_schedule(inst, opts.howell_budget);
        } else if (st == "caspar") {
            sched = build_cas_par(inst, opts.howell_budget);
        } else if (st == "prime") {
            sched = build_prime(inst);
        } else if (st == "ub1") {
            PipelineBuild b = build_ub1(inst, opts.howell_budget);
            sched = std::move(b.schedule);
            within = b.within_bound;
        } else if (st == "ub2") {
            sched = build_ub2(inst);
        } else if (st == "eucli") {
            sched = build_eucli(inst);
        } else {
            err << "error: unknown strategy '" << st << "'\n";
            return kBadInput;
        }
        if (!proven)
            proven = sched.dinner_count() <= lb_best(inst) ||
                     (st == "howell" && customer_groups(inst) == 2 && inst.s == 4);

        const ValidationReport rep = validate_schedule(sched);
        if (opts.out_path && *opts.out_path != "-")
            write_file(*opts.out_path, encode_schedule(sched) + "\n");
        out << "strategy: " << used << "\n";
        out << "dinners: " << sched.dinner_count() << "\n";
        out << "optimal: " << (proven ? "yes" : "no") << "\n";
        out << "feasible: " << (rep.feasible ? "yes" : "no") << "\n";
        if (!within)
            out << "note: sigma=2 base unavailable; the count may exceed ub1 = " << ub1(inst) << "\n";
        if (opts.out_path && *opts.out_path == "-")
            out << encode_schedule(sched) << "\n";
        return rep.feasible ? kOk : kFailure;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const SearchBudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kBuildBudget;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err)
{
    Schedule sched;
    try {
        sched = decode_schedule(read_file(path));
    } catch (const ParseError& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kBadInput;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }
    const ValidationReport rep = validate_schedule(sched);
    out << "instance " << to_string(sched.instance) << ", " << sched.dinner_count() << " dinners\n";
    if (rep.feasible) {
        out << "feasible\n";
        return kOk;
    }
    out << "infeasible: " << rep.violations.size() << " violations\n";
    for (const auto& v : rep.violations)
        out << "  " << to_string(v.kind) << ": " << v.detail << "\n";
    return kFailure;
}

int cmd_solve(const Instance& inst, const SolveOptions& opts, std::ostream& out, std::ostream& err)
{
    if (!check_instance(inst, err))
        return kBadInput;
    if (opts.node_budget < 1 || opts.timeout <= 0 || opts.max_dinners < 1) {
        err << "error: budget, timeout and max dinners must be positive\n";
        return kBadInput;
    }
    SolveLimits limits;
    limits.node_budget = opts.node_budget;
    limits.time_budget = opts.timeout;
    limits.max_dinners = opts.max_dinners;
    SolveResult res;
    try {
        res = solve_exact(inst, limits);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    }
    if (opts.witness_path && res.witness) {
        try {
            write_file(*opts.witness_path, encode_schedule(*res.witness) + "\n");
        } catch (const std::runtime_error& e) {
            err << "error: " << e.what() << "\n";
            return kBadInput;
        }
    }

    if (opts.json) {
        nlohmann::ordered_json j;
        j["status"] = to_string(res.status);
        j["value"] = res.value ? nlohmann::ordered_json(*res.value) : nlohmann::ordered_json(nullptr);
        j["lower_bound"] = res.lower_bound;
        j["nodes"] = res.nodes;
        out << j.dump() << "\n";
    } else {
        out << "status: " << to_string(res.status) << "\n";
        if (res.value)
            out << "value: " << *res.value << "\n";
        out << "lower bound: " << res.lower_bound << "\n";
        out << "nodes: " << res.nodes << "\n";
        if (opts.witness_path && res.witness)
            out << "witness: " << *opts.witness_path << "\n";
    }
    switch (res.status) {
    case SolveStatus::Optimal: return kOk;
    case SolveStatus::InfeasibleAtBound: return kFailure;
    default: return kSolveBudget;
    }
}

namespace {

struct LbRow {
    Instance inst;
    std::array<std::int64_t, 5> expected;
    int star;  // index of the strictly dominating bound
};

constexpr std::array<LbRow, 5> kLbTable{{
    {{5, 8, 8, 1, 2}, {8, 4, 7, 3, 0}, 0},
    {{6, 8, 8, 2, 1}, {4, 8, 6, 4, 6}, 1},
    {{1, 8, 8, 1, 1}, {8, 8, 64, 23, 0}, 2},
    {{1, 11, 8, 6, 4}, {2, 2, 4, 7, 4}, 3},
    {{1, 8, 11, 2, 1}, {4, 11, 44, 32, 60}, 4},
}};

struct UbRow {
    Instance inst;
    std::int64_t ub1, ub2;
};

constexpr std::array<UbRow, 2> kUbTable{{
    {{3, 6, 3, 2, 1}, 3, 11},
    {{3, 6, 9, 2, 1}, 18, 17},
}};

}  // namespace

int cmd_paper_tables(std::ostream& out)
{
    int failures = 0;
    auto line = [&](bool ok, const Instance& inst, const std::string& name, std::int64_t got, std::int64_t want,
                    bool starred) {
        failures += !ok;
        out << (ok ? "PASS " : "FAIL ") << to_string(inst) << " " << name << " = " << got << " (expected " << want
            << ")" << (starred ? " *" : "") << "\n";
    };

    for (const auto& row : kLbTable) {
        const BoundsReport r = compute_bounds(row.inst);
        const std::array<std::int64_t, 5> got{r.lb1, r.lb2, r.lb3, r.lb4.value_or(0), r.lb5};
        for (int k = 0; k < 5; ++k)
            line(got[k] == row.expected[k], row.inst, "lb" + std::to_string(k + 1), got[k], row.expected[k],
                 k == row.star);
        bool dominates = true;
        for (int k = 0; k < 5; ++k)
            dominates = dominates && (k == row.star || got[row.star] > got[k]);
        failures += !dominates;
        out << (dominates ? "PASS " : "FAIL ") << to_string(row.inst) << " lb" << row.star + 1
            << " strictly dominates\n";
    }
    for (const auto& row : kUbTable) {
        const BoundsReport r = compute_bounds(row.inst);
        line(r.ub1 == row.ub1, row.inst, "ub1", r.ub1, row.ub1, false);
        line(r.ub2 == row.ub2, row.inst, "ub2", r.ub2.value_or(0), row.ub2, false);
    }
    out << (failures == 0 ? "all cells match\n" : std::to_string(failures) + " mismatches\n");
    return failures == 0 ? kOk : kFailure;
}

}  // namespace dinner::cli

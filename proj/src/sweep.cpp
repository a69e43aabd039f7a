#include "dinner/sweep.hpp"

#include <exception>

#include "dinner/transforms.hpp"

namespace dinner {

std::vector<Instance> instance_grid(const GridSpec& spec)
{
    std::vector<Instance> out;
    for (int t = 1; t <= spec.t_max; ++t)
        for (int s = 1; s <= spec.s_max; ++s)
            for (int c = 1; c <= spec.c_max; ++c)
                for (int sigma = 1; sigma <= spec.sigma_max; ++sigma)
                    for (int gamma = 1; gamma <= spec.gamma_max; ++gamma)
                        out.push_back(Instance{t, s, c, sigma, gamma});
    return out;
}

OracleCell oracle_cell(const Instance& inst, const SolveLimits& limits)
{
    OracleCell cell;
    cell.inst = inst;
    try {
        const BoundsReport b = compute_bounds(inst);
        cell.lb_best = b.lb_best;
        cell.ub_best = b.ub_best;
        BestBuild best = best_feasible(inst);
        cell.best_count = best.dinner_count();
        cell.best_strategy = best.strategy;
        cell.best_feasible = validate_schedule(best.schedule).feasible;

        SolveLimits probe = limits;
        probe.fallback_witness = false;
        const SolveResult res = solve_exact(inst, probe);
        cell.status = res.status;
        cell.nodes = res.nodes;
        if (res.status == SolveStatus::Optimal && validate_schedule(*res.witness).feasible)
            cell.optimum = res.value;
        else if (res.status == SolveStatus::Optimal)
            cell.error = "solver witness failed validation";
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

std::vector<OracleCell> oracle_sweep_serial(const std::vector<Instance>& instances, const SolveLimits& limits)
{
    std::vector<OracleCell> out(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i)
        out[i] = oracle_cell(instances[i], limits);
    return out;
}

std::vector<OracleCell> oracle_sweep(const std::vector<Instance>& instances, const SolveLimits& limits)
{
    std::vector<OracleCell> out(instances.size());
    const auto n = static_cast<std::int64_t>(instances.size());
    // Cell costs vary by orders of magnitude.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = oracle_cell(instances[i], limits);
    return out;
}

namespace {

void lp_row(std::int64_t s, int cg_max, int sigma_max, std::vector<LpMismatch>& out)
{
    for (std::int64_t cg = 1; cg <= cg_max; ++cg)
        for (std::int64_t sigma = 1; sigma <= sigma_max; ++sigma) {
            const Rational closed = lp_closed_form(s, cg, sigma);
            const Rational scan = lp_breakpoint_value(s, cg, sigma);
            if (closed != scan)
                out.push_back({s, cg, sigma, closed, scan});
        }
}

}  // namespace

std::vector<LpMismatch> lp_crosscheck_serial(int s_max, int cg_max, int sigma_max)
{
    std::vector<LpMismatch> out;
    for (std::int64_t s = 1; s <= s_max; ++s)
        lp_row(s, cg_max, sigma_max, out);
    return out;
}

std::vector<LpMismatch> lp_crosscheck(int s_max, int cg_max, int sigma_max)
{
    std::vector<std::vector<LpMismatch>> rows(static_cast<std::size_t>(std::max(s_max, 0)));
#pragma omp parallel for schedule(static)
    for (int s = 1; s <= s_max; ++s)
        lp_row(s, cg_max, sigma_max, rows[s - 1]);
    std::vector<LpMismatch> out;
    for (auto& r : rows)
        out.insert(out.end(), r.begin(), r.end());
    return out;
}

namespace {

BuildCell build_cell(const Instance& inst)
{
    BuildCell cell;
    cell.inst = inst;
    try {
        const BoundsReport b = compute_bounds(inst);
        cell.lb_best = b.lb_best;
        cell.ub_best = b.ub_best;
        BestBuild best = best_feasible(inst);
        cell.strategy = best.strategy;
        cell.dinners = best.dinner_count();
        cell.feasible = validate_schedule(best.schedule).feasible;
    } catch (const std::exception& e) {
        cell.error = e.what();
    }
    return cell;
}

}  // namespace

std::vector<BuildCell> build_sweep_serial(const std::vector<Instance>& instances)
{
    std::vector<BuildCell> out(instances.size());
    for (std::size_t i = 0; i < instances.size(); ++i)
        out[i] = build_cell(instances[i]);
    return out;
}

std::vector<BuildCell> build_sweep(const std::vector<Instance>& instances)
{
    std::vector<BuildCell> out(instances.size());
    const auto n = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i)
        out[i] = build_cell(instances[i]);
    return out;
}

}  // namespace dinner

#include "doctest.h"

#include "dinner/bounds.hpp"
#include "dinner/constructions.hpp"
#include "dinner/solver.hpp"
#include "support.hpp"

using namespace dinner;

namespace {

void check_optimal(const Instance& inst, int value)
{
    const SolveResult r = solve_exact(inst);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.value == value);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->dinner_count() == value);
    CHECK(validate_schedule(*r.witness).feasible);
    CHECK(r.lower_bound == value);
}

}  // namespace

TEST_CASE("reference optima")
{
    check_optimal(Instance{2, 5, 6, 2, 3}, 3);
    check_optimal(Instance{2, 4, 2, 2, 1}, 3);
    check_optimal(Instance{1, 1, 1, 1, 1}, 1);
    check_optimal(Instance{1, 1, 2, 1, 1}, 2);
    check_optimal(Instance{1, 2, 2, 1, 1}, 4);
}

TEST_CASE("no two-dinner schedule for four suppliers and two groups")
{
    SolveLimits lim;
    lim.max_dinners = 2;
    const SolveResult r = solve_exact(Instance{2, 4, 2, 2, 1}, lim);
    CHECK(r.status == SolveStatus::InfeasibleAtBound);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.lower_bound == 3);
}

TEST_CASE("oracle mode agrees with pruned search for s, c <= 4")
{
    SolveLimits oracle;
    oracle.pruning = false;
    for (int t = 1; t <= 2; ++t)
        for (int s = 1; s <= 4; ++s)
            for (int c = 1; c <= 4; ++c)
                for (int sigma = 1; sigma <= 2; ++sigma)
                    for (int gamma = 1; gamma <= 2; ++gamma) {
                        const Instance inst{t, s, c, sigma, gamma};
                        CAPTURE(to_string(inst));
                        const SolveResult fast = solve_exact(inst);
                        const SolveResult slow = solve_exact(inst, oracle);
                        REQUIRE(fast.status == SolveStatus::Optimal);
                        REQUIRE(slow.status == SolveStatus::Optimal);
                        REQUIRE(fast.value == slow.value);
                        REQUIRE(validate_schedule(*slow.witness).feasible);
                    }
}

TEST_CASE("deterministic including node counts")
{
    for (const Instance inst : {Instance{2, 5, 6, 2, 3}, Instance{2, 4, 3, 2, 1}, Instance{3, 5, 4, 3, 2}}) {
        const SolveResult a = solve_exact(inst);
        const SolveResult b = solve_exact(inst);
        CHECK(a.status == b.status);
        CHECK(a.value == b.value);
        CHECK(a.nodes == b.nodes);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("budget exhaustion")
{
    SolveLimits lim;
    lim.node_budget = 5;
    const Instance inst{3, 5, 5, 2, 1};
    const SolveResult fb = solve_exact(inst, lim);
    CHECK(fb.status == SolveStatus::FeasibleOnly);
    REQUIRE(fb.witness.has_value());
    CHECK(validate_schedule(*fb.witness).feasible);
    CHECK(fb.value == fb.witness->dinner_count());
    CHECK(fb.lower_bound >= lb_best(inst));

    lim.fallback_witness = false;
    const SolveResult bare = solve_exact(inst, lim);
    CHECK(bare.status == SolveStatus::BudgetExhausted);
    CHECK_FALSE(bare.value.has_value());
}

TEST_CASE("invalid or oversized instances are rejected")
{
    CHECK_THROWS_AS(solve_exact(Instance{0, 1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(solve_exact(Instance{1, 65, 1, 1, 1}), PreconditionError);
}

TEST_CASE("certificates")
{
    CHECK(certify_optimal(build_trivial(Instance{1, 3, 2, 2, 3})) == Certificate::Optimal);
    CHECK(certify_optimal(build_prime(Instance{1, 4, 2, 2, 1})) == Certificate::Optimal);
    CHECK(certify_optimal(testing::table1()) == Certificate::Improvable);
    SolveLimits tiny;
    tiny.node_budget = 1;
    CHECK(certify_optimal(testing::table1(), tiny) == Certificate::Inconclusive);
    // Already at lb_best: nothing to search.
    CHECK(certify_optimal(build_sigma1(Instance{1, 4, 4, 1, 1}), tiny) == Certificate::Optimal);
    CHECK_THROWS_AS(certify_optimal(Schedule{Instance{1, 1, 1, 1, 1}, {}}), std::invalid_argument);
}

#include <random>

#include "doctest.h"

#include "dinner/bounds.hpp"
#include "dinner/transforms.hpp"
#include "support.hpp"

using namespace dinner;

namespace {

bool feasible(const Schedule& s) { return validate_schedule(s).feasible; }

}  // namespace

TEST_CASE("split_tables examples")
{
    const Schedule t1 = testing::table1();
    CHECK(split_tables(t1, 2) == t1);
    CHECK(split_tables(t1, 5).dinners == t1.dinners);
    const Schedule one = split_tables(t1, 1);
    CHECK(one.dinner_count() == 12);
    CHECK(one.instance.t == 1);
    CHECK(feasible(one));

    const Instance inst{4, 4, 4, 1, 1};
    const Schedule wide{inst, {Dinner{{{{1}, {1}}, {{2}, {2}}, {{3}, {3}}, {{4}, {4}}}}}};
    const Schedule halves = split_tables(wide, 2);
    CHECK(halves.dinner_count() == 2);
    CHECK(halves.dinners[0].tables.size() == 2);
    CHECK(halves.dinners[1].tables.size() == 2);
}

TEST_CASE("split_sigma examples")
{
    const Instance inst{1, 4, 1, 4, 1};
    const Schedule s{inst, {Dinner{{{{1, 2, 3, 4}, {1}}}}}};
    const Schedule out = split_sigma(s, 2);
    CHECK(out.instance.sigma == 2);
    CHECK(out.dinners == std::vector<Dinner>{Dinner{{{{1, 2}, {1}}}}, Dinner{{{{3, 4}, {1}}}}});
    CHECK(split_sigma(s, 4) == s);
    CHECK(feasible(split_sigma(testing::table1(), 1)));
}

TEST_CASE("group_gamma examples")
{
    const GammaGrouping full = group_gamma(Instance{2, 5, 6, 2, 3}, 3);
    CHECK(full.derived == Instance{2, 5, 2, 2, 1});
    CHECK(full.grouping.groups == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
    const Schedule derived = build_ub1(full.derived).schedule;
    const Schedule expanded = full.expand(derived);
    CHECK(expanded.instance == Instance{2, 5, 6, 2, 3});
    CHECK(feasible(expanded));
    CHECK_THROWS_AS(group_gamma(Instance{2, 5, 6, 2, 3}, 4), PreconditionError);
}

TEST_CASE("concat_suppliers examples")
{
    const Schedule single{Instance{1, 1, 2, 1, 1}, {Dinner{{{{1}, {1}}}}, Dinner{{{{1}, {2}}}}}};
    const Schedule empty{Instance{1, 0, 2, 1, 1}, {}};
    CHECK(concat_suppliers(single, empty) == single);
    const Schedule two = concat_suppliers(single, single);
    CHECK(two.instance == Instance{1, 2, 2, 1, 1});
    CHECK(two.dinner_count() == 4);
    CHECK(feasible(two));
    CHECK_THROWS(concat_suppliers(single, Schedule{Instance{2, 1, 2, 1, 1}, single.dinners}));
}

TEST_CASE("pipeline examples")
{
    CHECK(build_ub1(Instance{3, 6, 3, 2, 1}).schedule.dinner_count() == 3);
    CHECK(build_ub1(Instance{2, 5, 6, 2, 3}).schedule.dinner_count() == 3);
    const Schedule big = build_ub1(Instance{3, 6, 9, 2, 1}).schedule;
    CHECK(big.dinner_count() <= 18);
    CHECK(feasible(big));

    const Schedule a = build_ub2(Instance{3, 6, 3, 2, 1});
    CHECK(a.dinner_count() <= 11);
    CHECK(feasible(a));
    const Schedule b = build_ub2(Instance{3, 6, 9, 2, 1});
    CHECK(b.dinner_count() <= 17);
    CHECK(feasible(b));
    CHECK(build_ub2(Instance{2, 4, 4, 2, 1}).dinner_count() == 7);
    // On one table the two-table schedule is split in half; lb3 = 8 rules out 7 anyway.
    CHECK(build_ub2(Instance{1, 4, 4, 2, 1}).dinner_count() == 14);
    CHECK(ub2(Instance{1, 4, 4, 2, 1}) == 14);
    CHECK(lb3(Instance{1, 4, 4, 2, 1}) == 8);
    CHECK_THROWS_AS(build_ub2(Instance{1, 14, 2, 2, 1}), PreconditionError);

    const Schedule e12 = build_eucli(Instance{1, 12, 2, 2, 1});
    CHECK(e12.dinner_count() <= 42);
    CHECK(feasible(e12));
    const Schedule e14 = build_eucli(Instance{1, 14, 2, 2, 1});
    CHECK(e14.dinner_count() <= 49);
    CHECK(feasible(e14));
    CHECK(build_eucli(Instance{3, 6, 9, 2, 1}) == build_ub2(Instance{3, 6, 9, 2, 1}));

    CHECK(best_feasible(Instance{2, 5, 6, 2, 3}).dinner_count() == 3);
    CHECK(best_feasible(Instance{1, 9, 3, 3, 1}).dinner_count() == 9);
}

TEST_CASE("ub2 seats one supplier per table after the first evening")
{
    for (int s = 1; s <= 8; ++s)
        for (int sigma = 2; sigma <= 3; ++sigma)
            for (int c = 1; c <= 8; ++c) {
                const Instance inst{static_cast<int>(ceil_div(s, sigma)), s, c, sigma, 1};
                if (!ub2(inst))
                    continue;
                const Schedule sched = build_ub2(inst);
                REQUIRE(feasible(sched));
                for (std::size_t d = 1; d < sched.dinners.size(); ++d)
                    for (const auto& tab : sched.dinners[d].tables)
                        REQUIRE(tab.suppliers.size() == 1);
            }
}

TEST_CASE("transforms keep 1000 random feasible schedules feasible")
{
    std::mt19937 rng(2009);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int i = 0; i < 1000; ++i) {
        const Schedule s = testing::random_feasible_schedule(rng);
        REQUIRE(feasible(s));
        const Instance& inst = s.instance;
        CAPTURE(encode_schedule(s));

        const int t1 = pick(1, inst.t);
        const Schedule st = split_tables(s, t1);
        REQUIRE(feasible(st));
        REQUIRE(st.dinner_count() <= ceil_div(inst.t, t1) * s.dinner_count());

        const int sigma1 = pick(1, inst.sigma);
        const Schedule ss = split_sigma(s, sigma1);
        REQUIRE(feasible(ss));
        REQUIRE(ss.dinner_count() <= ceil_div(inst.sigma, sigma1) * s.dinner_count());

        const Schedule other = testing::random_feasible_schedule(rng);
        Schedule aligned = other;
        aligned.instance = Instance{inst.t, other.instance.s, inst.c, inst.sigma, inst.gamma};
        // Only usable when the other schedule fits the shared parameters.
        if (other.instance.c == inst.c && feasible(aligned)) {
            const Schedule cat = concat_suppliers(s, aligned);
            REQUIRE(feasible(cat));
            REQUIRE(cat.dinner_count() == s.dinner_count() + aligned.dinner_count());
        }
        const Schedule self = concat_suppliers(s, s);
        REQUIRE(feasible(self));

        const GammaGrouping g = group_gamma(inst, pick(1, inst.gamma));
        const Schedule derived = testing::random_feasible_schedule(rng);
        Schedule fit = derived;
        fit.instance = g.derived;
        if (derived.instance.c == g.derived.c && derived.instance.s == g.derived.s && feasible(fit))
            REQUIRE(feasible(g.expand(fit)));
        REQUIRE(feasible(g.expand(best_feasible(g.derived).schedule)));
    }
}

TEST_CASE("pipelines stay feasible and within their bounds")
{
    for (int t = 1; t <= 4; ++t)
        for (int s = 1; s <= 9; ++s)
            for (int c = 1; c <= 9; ++c)
                for (int sigma = 1; sigma <= 3; ++sigma)
                    for (int gamma = 1; gamma <= 3; ++gamma) {
                        const Instance inst{t, s, c, sigma, gamma};
                        CAPTURE(to_string(inst));
                        const BoundsReport b = compute_bounds(inst);
                        const PipelineBuild u1 = build_ub1(inst);
                        REQUIRE(feasible(u1.schedule));
                        if (b.ub1_witnessed)
                            REQUIRE(u1.schedule.dinner_count() <= b.ub1);
                        if (b.ub2) {
                            const Schedule u2 = build_ub2(inst);
                            REQUIRE(feasible(u2));
                            REQUIRE(u2.dinner_count() <= *b.ub2);
                        }
                        const Schedule eu = build_eucli(inst);
                        REQUIRE(feasible(eu));
                        REQUIRE(eu.dinner_count() <= b.ub_eucli);
                        const BestBuild best = best_feasible(inst);
                        REQUIRE(feasible(best.schedule));
                        REQUIRE(best.dinner_count() >= b.lb_best);
                        REQUIRE(best.dinner_count() <= b.ub_best);
                    }
}

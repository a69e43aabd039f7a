#include "doctest.h"

#include "dinner/howell.hpp"
#include "support.hpp"

using namespace dinner;

TEST_CASE("existence characterisation")
{
    CHECK_FALSE(howell_exists(2, 4));
    CHECK_FALSE(howell_exists(3, 4));
    CHECK_FALSE(howell_exists(5, 6));
    CHECK_FALSE(howell_exists(5, 8));
    CHECK_FALSE(howell_exists(2, 6));
    CHECK_FALSE(howell_exists(6, 6));
    CHECK(howell_exists(1, 2));
    CHECK(howell_exists(3, 6));
    CHECK(howell_exists(4, 6));
    CHECK(howell_exists(7, 8));
}

TEST_CASE("generated designs satisfy the axioms for 2n <= 10")
{
    for (int n2 = 2; n2 <= 10; n2 += 2)
        for (int m = n2 / 2; m <= n2 - 1; ++m) {
            CAPTURE(m);
            CAPTURE(n2);
            const auto h = generate_howell(m, n2);
            if (!howell_exists(m, n2)) {
                CHECK_FALSE(h.has_value());
                continue;
            }
            REQUIRE(h.has_value());
            CHECK(h->m == m);
            CHECK(h->n2 == n2);
            CHECK(testing::howell_axioms_hold(*h));
        }
}

TEST_CASE("axiom checker rejects broken arrays")
{
    HowellDesign h = *generate_howell(3, 6);
    REQUIRE(testing::howell_axioms_hold(h));
    HowellDesign swapped = h;
    std::swap(swapped.at(0, 0), swapped.at(1, 0));
    CHECK_FALSE(testing::howell_axioms_hold(swapped));
    HowellDesign blank = h;
    for (auto& cell : blank.cells)
        if (cell) {
            cell.reset();
            break;
        }
    CHECK_FALSE(testing::howell_axioms_hold(blank));
}

TEST_CASE("plain exhaustive search finds no H(2,4) and no H(3,4)")
{
    CHECK_FALSE(testing::HowellRefuter(2, 4).exists());
    CHECK_FALSE(testing::HowellRefuter(3, 4).exists());
    // Sanity: the same search does find designs that exist.
    CHECK(testing::HowellRefuter(3, 6).exists());
    CHECK(testing::HowellRefuter(2, 2).exists() == false);
    CHECK(testing::HowellRefuter(1, 2).exists());
}

TEST_CASE("generator search exhausts the exceptions")
{
    for (auto [m, n2] : {std::pair{2, 4}, std::pair{3, 4}}) {
        const HowellSearch res = search_howell(m, n2);
        CHECK(res.status == HowellStatus::Exhausted);
        CHECK_FALSE(res.design.has_value());
    }
    CHECK(search_howell(4, 6).status == HowellStatus::Found);
}

TEST_CASE("budget exhaustion is distinct from nonexistence")
{
    const HowellSearch res = search_howell(5, 6, 10);
    CHECK(res.status == HowellStatus::BudgetExceeded);
    CHECK_THROWS_AS(generate_howell(13, 14, 1), SearchBudgetExhausted);
}

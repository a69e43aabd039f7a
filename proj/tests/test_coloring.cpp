#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "dinner/coloring.hpp"

using namespace dinner;

namespace {

void check_proper_equitable(const EdgeColoring& col, std::size_t expected_edges)
{
    REQUIRE(col.edges.size() == expected_edges);
    REQUIRE(col.colors.size() == expected_edges);
    std::set<std::pair<int, int>> left_seen, right_seen;
    std::vector<int> sizes(col.k, 0);
    for (std::size_t e = 0; e < col.edges.size(); ++e) {
        const int c = col.colors[e];
        REQUIRE(c >= 0);
        REQUIRE(c < col.k);
        ++sizes[c];
        REQUIRE(left_seen.insert({col.edges[e].first, c}).second);
        REQUIRE(right_seen.insert({col.edges[e].second, c}).second);
    }
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    REQUIRE(*hi - *lo <= 1);
    CHECK(sizes == col.class_sizes());
}

}  // namespace

TEST_CASE("Latin square colouring of K_{3,3}")
{
    const EdgeColoring col = equitable_bipartite_coloring(3, 3, 3);
    CHECK(col.class_sizes() == std::vector<int>{3, 3, 3});
}

TEST_CASE("small equitable colourings")
{
    std::vector<int> sizes = equitable_bipartite_coloring(3, 3, 5).class_sizes();
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 2, 2, 2});
    CHECK(equitable_bipartite_coloring(2, 4, 4).class_sizes() == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("complete bipartite colourings are proper and equitable for a, b <= 8, k <= 20")
{
    for (int a = 1; a <= 8; ++a)
        for (int b = 1; b <= 8; ++b)
            for (int k = std::max(a, b); k <= 20; ++k) {
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(k);
                const EdgeColoring col = equitable_bipartite_coloring(a, b, k);
                CHECK(col.k == k);
                check_proper_equitable(col, static_cast<std::size_t>(a * b));
                for (int i = 0; i < a; ++i)
                    for (int j = 0; j < b; ++j)
                        REQUIRE(col.color_of(i, j) >= 0);
            }
}

TEST_CASE("too few colours are rejected")
{
    CHECK_THROWS_AS(equitable_bipartite_coloring(3, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(equitable_edge_coloring(2, 2, {{0, 0}, {0, 1}}, 1), std::invalid_argument);
}

TEST_CASE("random bipartite graphs")
{
    std::mt19937 rng(7);
    for (int round = 0; round < 400; ++round) {
        const int a = 1 + static_cast<int>(rng() % 8), b = 1 + static_cast<int>(rng() % 8);
        std::vector<std::pair<int, int>> edges;
        std::vector<int> deg_l(a), deg_r(b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (rng() % 3 != 0) {
                    edges.push_back({i, j});
                    ++deg_l[i];
                    ++deg_r[j];
                }
        const int delta = std::max(*std::max_element(deg_l.begin(), deg_l.end()),
                                   *std::max_element(deg_r.begin(), deg_r.end()));
        for (int k = std::max(delta, 1); k <= 20; k += 3) {
            const EdgeColoring col = equitable_edge_coloring(a, b, edges, k);
            check_proper_equitable(col, edges.size());
        }
    }
}

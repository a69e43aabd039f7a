#pragma once

#include <utility>
#include <vector>

namespace dinner {

// Proper edge colouring of a bipartite graph with left side 0..a-1 and right
// side 0..b-1. colors[e] is the colour of edges[e].
struct EdgeColoring {
    int a = 0;
    int b = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> colors;

    // Colour of edge (i, j) of the complete graph; -1 if absent.
    int color_of(int i, int j) const;
    std::vector<int> class_sizes() const;
};

// Equitable proper colouring of K_{a,b} with exactly k classes: classes
// differ in size by at most one. Requires k >= max(a, b).
EdgeColoring equitable_bipartite_coloring(int a, int b, int k);

// Same for an arbitrary simple bipartite graph; requires k >= max degree.
EdgeColoring equitable_edge_coloring(int a, int b, std::vector<std::pair<int, int>> edges, int k);

}  // namespace dinner

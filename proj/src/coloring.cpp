#include "dinner/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dinner {

int EdgeColoring::color_of(int i, int j) const
{
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e] == std::pair{i, j})
            return colors[e];
    return -1;
}

std::vector<int> EdgeColoring::class_sizes() const
{
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int col : colors)
        ++sizes[static_cast<std::size_t>(col)];
    return sizes;
}

namespace {

// Colour tables indexed by vertex (left u -> u, right v -> a + v).
class Colorer {
public:
    Colorer(int a, int b, int k, const std::vector<std::pair<int, int>>& edges)
        : a_(a), k_(k), edges_(edges), colors_(edges.size(), -1),
          at_(static_cast<std::size_t>(a + b) * k, -1), sizes_(static_cast<std::size_t>(k), 0)
    {
    }

    void assign(std::size_t e, int col)
    {
        colors_[e] = col;
        slot(left(e), col) = static_cast<int>(e);
        slot(right(e), col) = static_cast<int>(e);
        ++sizes_[col];
    }

    // Konig: free colour alpha at u, beta at v; if alpha is busy at v,
    // swap alpha/beta along the path leaving v first.
    void insert(std::size_t e)
    {
        const int u = left(e), v = right(e);
        const int alpha = free_color(u), beta = free_color(v);
        if (slot(v, alpha) != -1)
            flip_path(v, alpha, beta);
        assign(e, alpha);
    }

    // Moves one edge at a time from the largest class to the smallest
    // through alpha/beta alternating paths with one extra alpha edge.
    void balance()
    {
        for (;;) {
            auto [mn, mx] = std::minmax_element(sizes_.begin(), sizes_.end());
            if (*mx - *mn <= 1)
                return;
            const int alpha = static_cast<int>(mx - sizes_.begin());
            const int beta = static_cast<int>(mn - sizes_.begin());
            if (!shift_one(alpha, beta))
                throw std::logic_error("equitable colouring: no alternating path with alpha excess");
        }
    }

    std::vector<int> take() { return std::move(colors_); }

private:
    int left(std::size_t e) const { return edges_[e].first; }
    int right(std::size_t e) const { return a_ + edges_[e].second; }
    int other(std::size_t e, int w) const { return left(e) == w ? right(e) : left(e); }
    int& slot(int w, int col) { return at_[static_cast<std::size_t>(w) * k_ + col]; }

    int free_color(int w)
    {
        for (int col = 0; col < k_; ++col)
            if (slot(w, col) == -1)
                return col;
        throw std::logic_error("equitable colouring: vertex degree exceeds colour count");
    }

    std::vector<int> walk(int w, int first, int second)
    {
        std::vector<int> path;
        int col = first;
        for (;;) {
            const int e = slot(w, col);
            if (e == -1)
                break;
            path.push_back(e);
            w = other(static_cast<std::size_t>(e), w);
            col = col == first ? second : first;
        }
        return path;
    }

    void recolor(const std::vector<int>& path, int x, int y)
    {
        for (int e : path) {
            const auto ue = static_cast<std::size_t>(e);
            slot(left(ue), colors_[ue]) = -1;
            slot(right(ue), colors_[ue]) = -1;
            --sizes_[colors_[ue]];
        }
        for (int e : path) {
            const auto ue = static_cast<std::size_t>(e);
            assign(ue, colors_[ue] == x ? y : x);
        }
    }

    void flip_path(int v, int alpha, int beta) { recolor(walk(v, alpha, beta), alpha, beta); }

    bool shift_one(int alpha, int beta)
    {
        const int vertices = static_cast<int>(at_.size() / k_);
        for (int w = 0; w < vertices; ++w) {
            if (slot(w, alpha) == -1 || slot(w, beta) != -1)
                continue;
            std::vector<int> path = walk(w, alpha, beta);
            if (path.size() % 2 == 1) {
                recolor(path, alpha, beta);
                return true;
            }
        }
        return false;
    }

    int a_, k_;
    const std::vector<std::pair<int, int>>& edges_;
    std::vector<int> colors_;
    std::vector<int> at_;
    std::vector<int> sizes_;
};

int max_degree(int a, int b, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<int> deg(static_cast<std::size_t>(a + b), 0);
    for (auto [i, j] : edges) {
        if (i < 0 || i >= a || j < 0 || j >= b)
            throw std::invalid_argument("edge endpoint out of range");
        ++deg[i];
        ++deg[a + j];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

}  // namespace

EdgeColoring equitable_bipartite_coloring(int a, int b, int k)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("equitable_bipartite_coloring: sides must be >= 1");
    if (k < std::max(a, b))
        throw std::invalid_argument("equitable_bipartite_coloring: k = " + std::to_string(k) +
                                    " is below the maximum degree " + std::to_string(std::max(a, b)));
    EdgeColoring out{a, b, k, {}, {}};
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            out.edges.emplace_back(i, j);

    // Latin-square start: colour (i + j) mod max(a, b), then rebalance over k classes.
    const int base = std::max(a, b);
    Colorer col(a, b, k, out.edges);
    for (std::size_t e = 0; e < out.edges.size(); ++e)
        col.assign(e, (out.edges[e].first + out.edges[e].second) % base);
    col.balance();
    out.colors = col.take();
    return out;
}

EdgeColoring equitable_edge_coloring(int a, int b, std::vector<std::pair<int, int>> edges, int k)
{
    if (a < 0 || b < 0 || k < 1)
        throw std::invalid_argument("equitable_edge_coloring: bad sizes");
    const int delta = max_degree(a, b, edges);
    if (k < delta)
        throw std::invalid_argument("equitable_edge_coloring: k = " + std::to_string(k) +
                                    " is below the maximum degree " + std::to_string(delta));
    EdgeColoring out{a, b, k, std::move(edges), {}};
    Colorer col(a, b, k, out.edges);
    for (std::size_t e = 0; e < out.edges.size(); ++e)
        col.insert(e);
    col.balance();
    out.colors = col.take();
    return out;
}

}  // namespace dinner

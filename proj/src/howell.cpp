#include "dinner/howell.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>

#include "dinner/model.hpp"

namespace dinner {

bool howell_exists(int m, int n2)
{
    if (n2 < 2 || n2 % 2 != 0 || m < 1)
        return false;
    const int n = n2 / 2;
    if (m < n || m > 2 * n - 1)
        return false;
    const std::pair<int, int> key{m, n2};
    for (auto bad : {std::pair{2, 4}, std::pair{3, 4}, std::pair{5, 6}, std::pair{5, 8}})
        if (key == bad)
            return false;
    return true;
}

namespace {

class HowellSearcher {
public:
    HowellSearcher(int m, int n2, std::int64_t budget)
        : m_(m), n2_(n2), n_(n2 / 2), budget_(budget), lo_(static_cast<std::size_t>(m) * m, 0),
          hi_(static_cast<std::size_t>(m) * m, 0), row_used_(m, 0), col_used_(m, 0), col_filled_(m, 0),
          free_partners_(static_cast<std::size_t>(n2) + 1, 0)
    {
        full_ = n2_ == 64 ? ~0ULL : ((1ULL << n2_) - 1);
        for (int z = 1; z <= n2_; ++z)
            free_partners_[z] = full_ & ~bit(z);
    }

    void reseed(std::uint64_t seed, std::int64_t budget)
    {
        rng_.seed(seed);
        budget_ = budget;
        nodes_ = 0;
        out_of_budget_ = false;
        std::fill(lo_.begin(), lo_.end(), 0);
        std::fill(hi_.begin(), hi_.end(), 0);
        std::fill(row_used_.begin(), row_used_.end(), 0);
        std::fill(col_used_.begin(), col_used_.end(), 0);
        std::fill(col_filled_.begin(), col_filled_.end(), 0);
        for (int z = 1; z <= n2_; ++z)
            free_partners_[z] = full_ & ~bit(z);
    }

    std::int64_t nodes() const { return nodes_; }

    HowellSearch run()
    {
        HowellSearch out;
        if (m_ < n_ || m_ > 64 || n2_ > 64) {
            out.status = HowellStatus::Exhausted;
            return out;
        }
        for (int i = 0; i < n_; ++i)
            place(0, i, 2 * i + 1, 2 * i + 2);
        row_mask_ = 0;
        const bool found = (m_ == 1) ? true : row_ok(0) && solve_row(1);
        out.nodes = nodes_;
        if (found) {
            out.status = HowellStatus::Found;
            HowellDesign d;
            d.m = m_;
            d.n2 = n2_;
            d.cells.resize(lo_.size());
            for (std::size_t i = 0; i < lo_.size(); ++i)
                if (lo_[i] != 0)
                    d.cells[i] = std::pair{lo_[i], hi_[i]};
            out.design = std::move(d);
        } else {
            out.status = out_of_budget_ ? HowellStatus::BudgetExceeded : HowellStatus::Exhausted;
        }
        return out;
    }

private:
    static std::uint64_t bit(int symbol) { return 1ULL << (symbol - 1); }
    std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * m_ + c; }

    void place(int r, int c, int x, int y)
    {
        lo_[idx(r, c)] = x;
        hi_[idx(r, c)] = y;
        row_used_[r] |= bit(x) | bit(y);
        col_used_[c] |= bit(x) | bit(y);
        ++col_filled_[c];
        free_partners_[x] &= ~bit(y);
        free_partners_[y] &= ~bit(x);
        row_mask_ |= 1ULL << c;
    }

    void unplace(int r, int c, int x, int y)
    {
        lo_[idx(r, c)] = 0;
        hi_[idx(r, c)] = 0;
        row_used_[r] &= ~(bit(x) | bit(y));
        col_used_[c] &= ~(bit(x) | bit(y));
        --col_filled_[c];
        free_partners_[x] |= bit(y);
        free_partners_[y] |= bit(x);
        row_mask_ &= ~(1ULL << c);
    }

    // After row r is complete every column must still be able to reach n
    // filled cells and m-n empty ones.
    bool row_ok(int r) const
    {
        const int rows_left = m_ - r - 1;
        for (int c = 0; c < m_; ++c) {
            const int empties = (r + 1) - col_filled_[c];
            if (empties > m_ - n_ || n_ - col_filled_[c] > rows_left)
                return false;
        }
        return true;
    }

    bool column_open(int r, int c) const
    {
        if (row_mask_ & (1ULL << c))
            return false;
        if (c == 0 && r >= n_)
            return false;
        return col_filled_[c] < n_;
    }

    bool tick()
    {
        if (++nodes_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        return true;
    }

    bool solve_row(int r)
    {
        if (r == m_)
            return true;
        row_mask_ = 0;
        if (r < n_) {
            // Column 1 of rows 2..n: the pair holding the smallest symbol not yet in column 1.
            const std::uint64_t missing = full_ & ~col_used_[0];
            if (missing == 0)
                return false;
            const int x = std::countr_zero(missing) + 1;
            for (int y = x + 1; y <= n2_; ++y) {
                if ((col_used_[0] & bit(y)) || !(free_partners_[x] & bit(y)))
                    continue;
                if (!tick())
                    return false;
                place(r, 0, x, y);
                if (fill_row(r))
                    return true;
                unplace(r, 0, x, y);
                if (out_of_budget_)
                    return false;
            }
            return false;
        }
        return fill_row(r);
    }

    // Every symbol still missing from column c needs an unused partner that
    // is also missing there.
    bool columns_matchable() const
    {
        for (int c = 0; c < m_; ++c) {
            const std::uint64_t missing = full_ & ~col_used_[c];
            for (std::uint64_t rest = missing; rest; rest &= rest - 1) {
                const int z = std::countr_zero(rest) + 1;
                if ((free_partners_[z] & missing) == 0)
                    return false;
            }
        }
        return true;
    }

    bool fill_row(int r)
    {
        const std::uint64_t pending = full_ & ~row_used_[r];
        if (pending == 0) {
            if (!row_ok(r))
                return false;
            const std::uint64_t saved = row_mask_;
            if (solve_row(r + 1))
                return true;
            row_mask_ = saved;
            return false;
        }

        int open_cols = 0;
        for (int c = 0; c < m_; ++c)
            open_cols += column_open(r, c);
        if (open_cols < std::popcount(pending) / 2)
            return false;

        // Branch on the pending symbol with the fewest (column, partner) options.
        int best = -1, best_count = INT32_MAX;
        for (std::uint64_t rest = pending; rest; rest &= rest - 1) {
            const int z = std::countr_zero(rest) + 1;
            int count = 0;
            for (int c = 0; c < m_; ++c)
                if (column_open(r, c) && !(col_used_[c] & bit(z)))
                    count += std::popcount(pending & ~col_used_[c] & free_partners_[z]);
            if (count == 0)
                return false;
            if (count < best_count || (count == best_count && rng_() % 2 == 0)) {
                best = z;
                best_count = count;
            }
        }

        const int z = best;
        std::vector<std::pair<int, int>> options;
        for (int c = 0; c < m_; ++c) {
            if (!column_open(r, c) || (col_used_[c] & bit(z)))
                continue;
            const std::uint64_t partners = pending & ~col_used_[c] & free_partners_[z];
            for (std::uint64_t rest = partners; rest; rest &= rest - 1)
                options.emplace_back(c, std::countr_zero(rest) + 1);
        }
        std::shuffle(options.begin(), options.end(), rng_);
        for (auto [c, y] : options) {
            const int lo = std::min(y, z), hi = std::max(y, z);
            if (!tick())
                return false;
            place(r, c, lo, hi);
            if (columns_matchable() && fill_row(r))
                return true;
            unplace(r, c, lo, hi);
            if (out_of_budget_)
                return false;
        }
        return false;
    }

    int m_, n2_, n_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    bool out_of_budget_ = false;
    std::uint64_t full_ = 0;
    std::uint64_t row_mask_ = 0;
    std::vector<int> lo_, hi_;
    std::vector<std::uint64_t> row_used_, col_used_;
    std::vector<int> col_filled_;
    std::vector<std::uint64_t> free_partners_;
    std::mt19937_64 rng_;
};

}  // namespace

HowellSearch search_howell(int m, int n2, std::int64_t node_budget)
{
    if (n2 < 2 || n2 % 2 != 0)
        throw std::invalid_argument("search_howell: symbol count must be even and >= 2");
    if (m < 1)
        throw std::invalid_argument("search_howell: side must be >= 1");

    // Restarts with growing budgets and fresh seeds; a run that finishes
    // inside its own budget is a complete refutation.
    HowellSearcher searcher(m, n2, node_budget);
    std::int64_t spent = 0;
    std::int64_t slice = 20'000;
    for (std::uint64_t attempt = 0;; ++attempt) {
        const std::int64_t budget = std::min(slice, node_budget - spent);
        searcher.reseed(0x9E3779B97F4A7C15ULL * (attempt + 1), budget);
        HowellSearch res = searcher.run();
        spent += res.nodes;
        res.nodes = spent;
        if (res.status != HowellStatus::BudgetExceeded || spent >= node_budget)
            return res;
        slice = slice + slice / 2;
    }
}

std::optional<HowellDesign> generate_howell(int m, int n2, std::int64_t node_budget)
{
    if (n2 < 2 || n2 % 2 != 0)
        throw std::invalid_argument("generate_howell: symbol count must be even and >= 2");
    if (!howell_exists(m, n2))
        return std::nullopt;

    static std::mutex mu;
    static std::map<std::pair<int, int>, HowellDesign> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({m, n2}); it != cache.end())
            return it->second;
    }
    HowellSearch res = search_howell(m, n2, node_budget);
    if (res.status == HowellStatus::BudgetExceeded)
        throw SearchBudgetExhausted("Howell search for H(" + std::to_string(m) + "," + std::to_string(n2) +
                                    ") exceeded " + std::to_string(node_budget) + " nodes");
    if (res.status == HowellStatus::Exhausted)
        throw std::logic_error("Howell search found no H(" + std::to_string(m) + "," + std::to_string(n2) +
                               ") although one exists");
    std::lock_guard lock(mu);
    cache.emplace(std::pair{m, n2}, *res.design);
    return res.design;
}

}  // namespace dinner

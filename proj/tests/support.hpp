#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dinner/constructions.hpp"
#include "dinner/howell.hpp"
#include "dinner/model.hpp"
#include "dinner/schedule_io.hpp"
#include "dinner/transforms.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(DINNER_FIXTURE_DIR) + "/" + name; }

inline dinner::Schedule table1() { return dinner::decode_schedule(dinner::read_file(fixture("table1.json"))); }

// Written without looking at the generator: the three axioms of H(m, 2n).
inline bool howell_axioms_hold(const dinner::HowellDesign& h)
{
    if (static_cast<int>(h.cells.size()) != h.m * h.m)
        return false;
    std::set<std::pair<int, int>> pairs;
    for (int r = 0; r < h.m; ++r)
        for (int c = 0; c < h.m; ++c) {
            const auto& cell = h.at(r, c);
            if (!cell)
                continue;
            auto [a, b] = *cell;
            if (a == b || a < 1 || b < 1 || a > h.n2 || b > h.n2)
                return false;
            if (!pairs.insert({std::min(a, b), std::max(a, b)}).second)
                return false;
        }
    for (int line = 0; line < h.m; ++line) {
        std::vector<int> in_row(h.n2 + 1, 0), in_col(h.n2 + 1, 0);
        for (int k = 0; k < h.m; ++k) {
            if (const auto& cell = h.at(line, k)) {
                ++in_row[cell->first];
                ++in_row[cell->second];
            }
            if (const auto& cell = h.at(k, line)) {
                ++in_col[cell->first];
                ++in_col[cell->second];
            }
        }
        for (int x = 1; x <= h.n2; ++x)
            if (in_row[x] != 1 || in_col[x] != 1)
                return false;
    }
    return true;
}

// Plain exhaustive search without symmetry breaking: every cell is tried
// empty and with every pair still allowed.
class HowellRefuter {
public:
    HowellRefuter(int m, int n2)
        : m_(m), n2_(n2), used_(n2 + 1, std::vector<bool>(n2 + 1)), row_(m, std::vector<bool>(n2 + 1)),
          col_(m, std::vector<bool>(n2 + 1))
    {
    }

    bool exists() { return fill(0); }

private:
    bool complete(const std::vector<bool>& seen) const
    {
        for (int x = 1; x <= n2_; ++x)
            if (!seen[x])
                return false;
        return true;
    }

    bool fill(int cell)
    {
        const int r = cell / m_, c = cell % m_;
        if (c == 0 && r > 0 && !complete(row_[r - 1]))
            return false;
        if (cell == m_ * m_) {
            for (int k = 0; k < m_; ++k)
                if (!complete(col_[k]))
                    return false;
            return true;
        }
        for (int a = 1; a <= n2_; ++a)
            for (int b = a + 1; b <= n2_; ++b) {
                if (used_[a][b] || row_[r][a] || row_[r][b] || col_[c][a] || col_[c][b])
                    continue;
                set(r, c, a, b, true);
                const bool ok = fill(cell + 1);
                set(r, c, a, b, false);
                if (ok)
                    return true;
            }
        return fill(cell + 1);
    }

    void set(int r, int c, int a, int b, bool on)
    {
        used_[a][b] = on;
        row_[r][a] = row_[r][b] = on;
        col_[c][a] = col_[c][b] = on;
    }

    int m_, n2_;
    std::vector<std::vector<bool>> used_, row_, col_;
};

// A feasible schedule with random shape: a random instance, one of the
// generic constructions, then ids relabelled, tables shuffled and some
// tables moved into dinners of their own.
inline dinner::Schedule random_feasible_schedule(std::mt19937& rng)
{
    using namespace dinner;
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const Instance inst{pick(1, 4), pick(1, 9), pick(1, 9), pick(1, 4), pick(1, 4)};
    Schedule s;
    switch (pick(0, 3)) {
    case 0: s = build_eucli(inst); break;
    case 1: s = build_ub1(inst).schedule; break;
    case 2: s = best_feasible(inst).schedule; break;
    default: {
        Instance one = inst;
        one.sigma = 1;
        s = build_sigma1(one);
        s.instance = inst;
        break;
    }
    }

    std::vector<int> sup(inst.s), cust(inst.c);
    std::iota(sup.begin(), sup.end(), 1);
    std::iota(cust.begin(), cust.end(), 1);
    std::shuffle(sup.begin(), sup.end(), rng);
    std::shuffle(cust.begin(), cust.end(), rng);
    std::vector<Dinner> extra;
    for (auto& d : s.dinners) {
        for (auto& tab : d.tables) {
            for (int& x : tab.suppliers)
                x = sup[x - 1];
            for (int& x : tab.customers)
                x = cust[x - 1];
        }
        std::shuffle(d.tables.begin(), d.tables.end(), rng);
        while (d.tables.size() > 1 && pick(0, 3) == 0) {
            extra.push_back(Dinner{{d.tables.back()}});
            d.tables.pop_back();
        }
    }
    s.dinners.insert(s.dinners.end(), extra.begin(), extra.end());
    std::shuffle(s.dinners.begin(), s.dinners.end(), rng);
    normalize(s);
    return s;
}

}  // namespace testing

#pragma once

#include <cstdint>
#include <optional>

#include <boost/rational.hpp>

#include "dinner/model.hpp"

namespace dinner {

using Rational = boost::rational<std::int64_t>;

// All closed-form bounds for one instance. Not-applicable bounds are empty.
struct BoundsReport {
    std::int64_t lb1 = 0;
    std::int64_t lb2 = 0;
    std::int64_t lb3 = 0;
    std::optional<std::int64_t> lb4;  // only when gamma < c
    std::int64_t lb5 = 0;
    int lb5_j = 0;                    // first j attaining lb5, 0 when sigma == 1
    std::optional<int> j_star;        // only when s >= 2
    std::int64_t lb_best = 0;

    std::int64_t ub1 = 0;
    std::optional<std::int64_t> ub1_improved;  // only when s*gamma > c
    std::optional<std::int64_t> ub2;           // only when ceil(s/sigma) <= ceil(c/gamma)
    std::int64_t ub_eucli = 0;
    std::int64_t ub_best = 0;

    // Whether the sigma=2 base schedule behind ub1 / ub1_improved exists for
    // this instance. Unwitnessed values are reported but excluded from ub_best.
    bool ub1_witnessed = true;
    bool ub1_improved_witnessed = false;

    friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

std::int64_t lb1(const Instance& inst);
std::int64_t lb2(const Instance& inst);
std::int64_t lb3(const Instance& inst);
std::optional<std::int64_t> lb4(const Instance& inst);

struct Lb5Detail {
    std::int64_t value = 0;                 // clamped at 0
    std::optional<std::int64_t> unclamped;  // max over j before clamping; empty when sigma == 1
    int argmax = 0;
};

Lb5Detail lb5_detail(const Instance& inst);
inline std::int64_t lb5(const Instance& inst) { return lb5_detail(inst).value; }

// Per-supplier objective of the table-count relaxation at multiplicity j >= 2:
// 2*cg/j - (s-1)/(j(j-1)).
Rational lb5_objective(std::int64_t s, std::int64_t cg, std::int64_t j);

// Floor of 1/(1 - sqrt((s-1)/(s-1+2cg))), computed exactly. Requires s >= 2.
int j_star(std::int64_t s, std::int64_t cg);

// Optimal value of the per-supplier relaxation as the closed form
// max(cg/sigma, max_{j=2..sigma} lb5_objective(j)).
Rational lp_closed_form(std::int64_t s, std::int64_t cg, std::int64_t sigma);

// Same value, obtained independently by evaluating the dual max-min
// expression max_{mu>=0} min_{j=1..sigma} ((j-1)cg-(s-1))mu + cg/j at its
// breakpoints mu in {0, 1/(k(k-1)) : k=2..sigma}.
Rational lp_breakpoint_value(std::int64_t s, std::int64_t cg, std::int64_t sigma);

std::int64_t lb_best(const Instance& inst);

std::int64_t ub1(const Instance& inst);
std::optional<std::int64_t> ub1_improved(const Instance& inst);
std::optional<std::int64_t> ub2(const Instance& inst);
std::int64_t ub_eucli(const Instance& inst);

bool ub1_witnessed(const Instance& inst);
bool ub1_improved_witnessed(const Instance& inst);

BoundsReport compute_bounds(const Instance& inst);

// Exact integer helpers.
std::uint64_t isqrt_floor(unsigned __int128 n);
std::uint64_t isqrt_ceil(unsigned __int128 n);
std::int64_t ceil_of(const Rational& r);

}  // namespace dinner

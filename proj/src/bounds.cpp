#include "dinner/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "dinner/constructions.hpp"
#include "dinner/howell.hpp"

namespace dinner {

std::uint64_t isqrt_floor(unsigned __int128 n)
{
    constexpr std::uint64_t top = UINT64_MAX;
    const long double est = std::sqrt(static_cast<long double>(n));
    std::uint64_t r = est >= static_cast<long double>(top) ? top : static_cast<std::uint64_t>(est);
    // The long double estimate can be off by one either way near perfect squares.
    while (static_cast<unsigned __int128>(r) * r > n)
        --r;
    while (r < top && static_cast<unsigned __int128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::uint64_t isqrt_ceil(unsigned __int128 n)
{
    std::uint64_t r = isqrt_floor(n);
    return static_cast<unsigned __int128>(r) * r == n ? r : r + 1;
}

std::int64_t ceil_of(const Rational& r) { return ceil_div(r.numerator(), r.denominator()); }

std::int64_t lb1(const Instance& inst) { return ceil_div(inst.s, inst.sigma); }

std::int64_t lb2(const Instance& inst) { return ceil_div(inst.c, inst.gamma); }

std::int64_t lb3(const Instance& inst)
{
    return ceil_div(static_cast<std::int64_t>(inst.s) * lb2(inst), static_cast<std::int64_t>(inst.t) * inst.sigma);
}

std::optional<std::int64_t> lb4(const Instance& inst)
{
    if (inst.gamma >= inst.c)
        return std::nullopt;
    using u128 = unsigned __int128;
    const u128 s = static_cast<u128>(inst.s);
    const u128 c = static_cast<u128>(inst.c);
    const u128 g = static_cast<u128>(inst.gamma);
    // With M = max(sqrt(g/(c-g)), 1) the bracket collapses to c when M = 1
    // and to 2*sqrt(g(c-g)) otherwise, so the bound is ceil(sqrt(N) / (t*g)).
    const u128 radicand = 2 * g <= c ? c * c * s : 4 * s * g * (c - g);
    const std::int64_t den = static_cast<std::int64_t>(inst.t) * inst.gamma;
    return ceil_div(static_cast<std::int64_t>(isqrt_ceil(radicand)), den);
}

Rational lb5_objective(std::int64_t s, std::int64_t cg, std::int64_t j)
{
    return Rational(2 * cg, j) - Rational(s - 1, j * (j - 1));
}

Lb5Detail lb5_detail(const Instance& inst)
{
    Lb5Detail out;
    const std::int64_t s = inst.s;
    const std::int64_t cg = lb2(inst);
    for (std::int64_t j = 2; j <= inst.sigma; ++j) {
        const std::int64_t num = s * (2 * cg * (j - 1) - (s - 1));
        const std::int64_t den = static_cast<std::int64_t>(inst.t) * j * (j - 1);
        const std::int64_t v = ceil_div(num, den);
        if (!out.unclamped || v > *out.unclamped) {
            out.unclamped = v;
            out.argmax = static_cast<int>(j);
        }
    }
    out.value = out.unclamped ? std::max<std::int64_t>(*out.unclamped, 0) : 0;
    return out;
}

int j_star(std::int64_t s, std::int64_t cg)
{
    if (s < 2 || cg < 1)
        throw std::invalid_argument("j_star requires s >= 2 and cg >= 1");
    // 1/(1 - sqrt(a/b)) = (b + sqrt(ab)) / (b - a) with a = s-1, b = s-1+2cg,
    // and floor((b + x)/d) = floor((b + floor(x))/d) for integer b, d.
    const std::int64_t a = s - 1;
    const std::int64_t b = s - 1 + 2 * cg;
    const auto root = static_cast<std::int64_t>(isqrt_floor(static_cast<unsigned __int128>(a) * b));
    return static_cast<int>((b + root) / (2 * cg));
}

Rational lp_closed_form(std::int64_t s, std::int64_t cg, std::int64_t sigma)
{
    Rational best(cg, sigma);
    for (std::int64_t j = 2; j <= sigma; ++j)
        best = std::max(best, lb5_objective(s, cg, j));
    return best;
}

Rational lp_breakpoint_value(std::int64_t s, std::int64_t cg, std::int64_t sigma)
{
    std::vector<Rational> mus{Rational(0)};
    for (std::int64_t k = 2; k <= sigma; ++k)
        mus.emplace_back(1, k * (k - 1));
    mus.emplace_back(1, 2);

    std::optional<Rational> best;
    for (const Rational& mu : mus) {
        std::optional<Rational> inner;
        for (std::int64_t j = 1; j <= sigma; ++j) {
            Rational line = Rational((j - 1) * cg - (s - 1)) * mu + Rational(cg, j);
            inner = inner ? std::min(*inner, line) : line;
        }
        best = best ? std::max(*best, *inner) : *inner;
    }
    return *best;
}

std::int64_t lb_best(const Instance& inst)
{
    std::int64_t best = std::max({lb1(inst), lb2(inst), lb3(inst), lb5(inst)});
    if (auto v = lb4(inst))
        best = std::max(best, *v);
    return best;
}

std::int64_t ub1(const Instance& inst)
{
    const std::int64_t cg = lb2(inst);
    return ceil_div(2, inst.sigma) * ceil_div(std::min<std::int64_t>(cg, inst.s), inst.t) *
           std::max(cg, ceil_div(inst.s, 2));
}

std::optional<std::int64_t> ub1_improved(const Instance& inst)
{
    if (static_cast<std::int64_t>(inst.s) * inst.gamma <= inst.c)
        return std::nullopt;
    const std::int64_t cg = lb2(inst);
    const std::int64_t half = ceil_div(inst.s, 2);
    return ceil_div(2, inst.sigma) * ceil_div(std::min(cg, half), inst.t) * std::max(cg, half);
}

std::optional<std::int64_t> ub2(const Instance& inst)
{
    const std::int64_t cg = lb2(inst);
    const std::int64_t blocks = lb1(inst);
    if (blocks > cg)
        return std::nullopt;
    return ceil_div(blocks, inst.t) * (1 - inst.sigma + inst.sigma * std::max(cg, 2 * blocks));
}

std::int64_t ub_eucli(const Instance& inst)
{
    const std::int64_t cg = lb2(inst);
    const std::int64_t sg = inst.sigma;
    const std::int64_t q = lb1(inst) / cg;
    const std::int64_t rho = lb1(inst) % cg;
    std::int64_t total = q * ceil_div(cg, inst.t) * (1 - sg + 2 * sg * cg);
    if (rho > 0)
        total += ceil_div(rho, inst.t) * (1 - sg + 2 * sg * std::max(cg, 2 * rho));
    return total;
}

namespace {

// Whether the sigma=2 base schedule on `tables` tables reaches
// max(cg, ceil(s/2)) dinners.
bool sigma2_base_within(int s, int cg, int tables)
{
    const long long target = std::max<long long>(cg, ceil_div(s, 2));
    if (s % 2 == 0 && cg == s)  // no Howell design; the sigma=1 base needs s tables
        return tables >= s;
    auto plan = sigma2_route_dinners(s, cg, tables);
    return plan && *plan <= target;
}

}  // namespace

bool ub1_witnessed(const Instance& inst)
{
    const int cg = customer_groups(inst);
    if (static_cast<std::int64_t>(inst.s) * inst.gamma <= inst.c)
        return true;
    return sigma2_base_within(inst.s, cg, std::min(cg, inst.s));
}

bool ub1_improved_witnessed(const Instance& inst)
{
    if (static_cast<std::int64_t>(inst.s) * inst.gamma <= inst.c)
        return false;
    const int cg = customer_groups(inst);
    return sigma2_base_within(inst.s, cg, std::min(cg, static_cast<int>(ceil_div(inst.s, 2))));
}

BoundsReport compute_bounds(const Instance& inst)
{
    require_valid(inst);
    BoundsReport r;
    r.lb1 = lb1(inst);
    r.lb2 = lb2(inst);
    r.lb3 = lb3(inst);
    r.lb4 = lb4(inst);
    Lb5Detail d5 = lb5_detail(inst);
    r.lb5 = d5.value;
    r.lb5_j = d5.argmax;
    if (inst.s >= 2)
        r.j_star = j_star(inst.s, r.lb2);
    r.lb_best = lb_best(inst);

    r.ub1 = ub1(inst);
    r.ub1_improved = ub1_improved(inst);
    r.ub2 = ub2(inst);
    r.ub_eucli = ub_eucli(inst);
    r.ub1_witnessed = ub1_witnessed(inst);
    r.ub1_improved_witnessed = r.ub1_improved && ub1_improved_witnessed(inst);

    r.ub_best = r.ub_eucli;
    if (r.ub1_witnessed)
        r.ub_best = std::min(r.ub_best, r.ub1);
    if (r.ub1_improved && r.ub1_improved_witnessed)
        r.ub_best = std::min(r.ub_best, *r.ub1_improved);
    if (r.ub2)
        r.ub_best = std::min(r.ub_best, *r.ub2);
    return r;
}

}  // namespace dinner

#pragma once

// Test-only reference computations. Each one follows the literal definition
// and shares no code path with the library routine it checks.

#include "bookshift/density.hpp"
#include "bookshift/rational.hpp"
#include "bookshift/series.hpp"

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using bookshift::Rational;

// Every map with P(i) in (i, N] for i < N and P(N) = N, lexicographic order.
inline std::vector<std::vector<std::size_t>> all_parent_functions(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> p(n, n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.push_back(p);
            return;
        }
        for (std::size_t v = i + 1; v <= n; ++v) {
            p[i - 1] = v;
            rec(i + 1);
        }
    };
    rec(1);
    return out;
}

// Literal pairwise condition: for i < j, j < P(i) implies P(j) <= P(i).
inline bool non_crossing(const std::vector<std::size_t>& p)
{
    const std::size_t n = p.size();
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            if (j < p[i - 1] && !(p[j - 1] <= p[i - 1]))
                return false;
    return true;
}

inline std::vector<std::vector<std::size_t>> admissible_by_filter(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    for (auto& p : all_parent_functions(n))
        if (non_crossing(p))
            out.push_back(p);
    return out;
}

inline bool is_ancestor(const std::vector<std::size_t>& p, std::size_t anc, std::size_t node)
{
    const std::size_t n = p.size();
    while (true) {
        if (node == anc)
            return true;
        if (node == n)
            return false;
        node = p[node - 1];
    }
}

// Sum over edges i -> P(i) of (mass of every descendant of i) + (gaps i..P(i)-1).
inline Rational edge_sum_cost(const std::vector<std::size_t>& p, const bookshift::Instance& inst)
{
    const std::size_t n = p.size();
    Rational cost = 0;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 1; k < n; ++k)
            if (is_ancestor(p, i, k))
                cost += inst.a[k - 1];
        for (std::size_t k = i; k < p[i - 1]; ++k)
            cost += inst.b[k - 1];
    }
    return cost;
}

inline std::size_t depth_of(const std::vector<std::size_t>& p, std::size_t i)
{
    std::size_t d = 0;
    while (i != p.size()) {
        i = p[i - 1];
        ++d;
    }
    return d;
}

// Window integral sampled on a grid of step 1/(4 * lcm of all denominators).
inline bool kappa_mixed_on_grid(const bookshift::BinaryDensity& rho, const Rational& kappa, const Rational& eps)
{
    std::vector<Rational> all = rho.breakpoints();
    all.push_back(eps);
    const bookshift::BigInt den = 4 * bookshift::common_denominator(all);
    const Rational step(1, den);
    const Rational lo = kappa * eps;
    const Rational hi = (1 - kappa) * eps;
    for (Rational y = 0; y <= 1 - eps; y += step) {
        // Integrate by sampling run membership of each grid cell midpoint.
        Rational mass = 0;
        for (Rational x = y; x < y + eps; x += step) {
            const Rational mid = x + step / 2;
            if (rho.value_at(mid) == 1)
                mass += step;
        }
        if (mass < lo || mass > hi)
            return false;
    }
    return true;
}

inline Rational lower_bound_scan(const Rational& kappa, const Rational& eps, const Rational& s, unsigned max_n)
{
    Rational best;
    Rational pow = 1;
    for (unsigned n = 0; n <= max_n; ++n) {
        Rational g = (1 + Rational(n) * kappa * kappa) * s - pow * eps;
        if (n == 0 || g > best)
            best = g;
        pow *= 2;
    }
    return best;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num = 20, int max_den = 6, bool allow_zero = false)
{
    std::uniform_int_distribution<int> num(allow_zero ? 0 : 1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline bookshift::Instance random_book_instance(std::mt19937_64& rng, std::size_t n)
{
    bookshift::Instance inst;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        inst.a.push_back(random_rational(rng));
        inst.b.push_back(random_rational(rng));
    }
    inst.a.emplace_back(0);
    return inst;
}

} // namespace oracle

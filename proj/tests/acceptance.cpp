// Acceptance suite: one PASS/FAIL line per criterion, each with its time limit.
// The process exits non-zero if any criterion fails.

#include "bookshift/bookshift.h"
#include "bookshift/density.hpp"
#include "bookshift/error.hpp"
#include "bookshift/graphio.hpp"
#include "bookshift/series.hpp"
#include "bookshift/solver.hpp"
#include "bookshift/trees.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>
#include <vector>

using namespace bookshift;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::vector<Rational> ints(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

const Instance example1{ints({12, 7, 5, 4, 14, 0}), ints({5, 10, 17, 5, 5})};

Outcome example_replay()
{
    Outcome o;
    const auto series = AlternatingSeries::from_signed(ints({12, -5, 7, -10, 5, -17, 4, -5, 14, -5}));
    const ReplayTrace trace = replay_trace({series, {3, 4, 1, 1, 1}});
    o.require(trace.move_costs == ints({22, 19, 17, 46, 38}), "per-move costs differ from 22 19 17 46 38");
    o.require(trace.total == 142, "total is " + to_string(trace.total));
    const ParentFunction p = plan_to_tree({series, {3, 4, 1, 1, 1}});
    o.require(tree_cost(p, example1) == 142, "tree_cost is " + to_string(tree_cost(p, example1)));
    o.require(graph_cost(build_graph(p, example1)) == 142, "graph_cost differs from 142");
    return o;
}

Outcome cost_decomposition()
{
    Outcome o;
    const ParentFunction p({2, 4, 4, 6, 6, 6});
    const CostCoefficients c = cost_coefficients(p);
    o.require(c.alpha == std::vector<std::size_t>{3, 2, 2, 1, 1}, "a-coefficients differ from 3 2 2 1 1");
    o.require(c.beta == std::vector<std::size_t>{1, 1, 2, 1, 2}, "b-coefficients differ from 1 1 2 1 2");
    // Each coefficient recovered by probing tree_cost with a unit mass.
    for (std::size_t i = 0; i < 5; ++i) {
        Instance unit{std::vector<Rational>(6, 0), std::vector<Rational>(5, 0)};
        unit.a[i] = 1;
        o.require(tree_cost(p, unit) == c.alpha[i], "probe of a_" + std::to_string(i + 1) + " disagrees");
        unit.a[i] = 0;
        unit.b[i] = 1;
        o.require(tree_cost(p, unit) == c.beta[i], "probe of b_" + std::to_string(i + 1) + " disagrees");
    }
    return o;
}

Outcome two_pair_instance()
{
    Outcome o;
    const auto series = AlternatingSeries::from_signed(ints({5, -1, 1, -5}));
    std::vector<Rational> plan_costs;
    for (std::size_t first = 1; first <= 2; ++first)
        plan_costs.push_back(replay({series, {first, 1}}));
    for (const auto& c : plan_costs) {
        o.require(c == 17, "a plan costs " + to_string(c));
        o.require(c != 14, "reverse value 14 reached");
    }
    const Instance inst = to_instance(series);
    std::size_t trees = 0;
    for (AdmissibleEnumerator it(3); it.valid(); it.next(), ++trees)
        o.require(tree_cost(it.current(), inst) == 17, "an admissible tree does not cost 17");
    o.require(trees == 2, "expected two admissible trees");
    o.require(solve_dp(inst).cost == 17 && solve_bruteforce(inst).cost == 17, "optimum differs from 17");
    return o;
}

Outcome catalan_counts()
{
    Outcome o;
    std::vector<unsigned long long> count(13, 0);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (AdmissibleEnumerator it(n); it.valid(); it.next())
            ++count[n];
    }
    for (std::size_t n = 2; n <= 12; ++n) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), 2 * n - 2, n - 1);
        const mpz_class formula = binom / static_cast<unsigned long>(n);
        o.require(mpz_class(static_cast<unsigned long>(count[n])) == formula,
                  "N = " + std::to_string(n) + " enumerated " + std::to_string(count[n]));
    }
    // Splitting off the subtree of the root's leftmost child.
    for (std::size_t n = 2; n <= 10; ++n) {
        unsigned long long rhs = 0;
        for (std::size_t i = 1; i < n; ++i)
            rhs += count[i] * count[n - i];
        o.require(count[n] == rhs, "recurrence fails at N = " + std::to_string(n));
    }
    return o;
}

Outcome inadmissible_example()
{
    Outcome o;
    const ParentFunction bad({3, 4, 4, 4});
    o.require(!is_admissible(bad), "(3,4,4,4) accepted");
    for (const auto& p : enumerate_admissible(4))
        o.require(p != bad, "(3,4,4,4) enumerated");
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    for (std::size_t n = 1; n <= 7; ++n) {
        const std::size_t bits = 2 * n - 1;
        for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
            Instance inst;
            for (std::size_t i = 0; i < n; ++i)
                inst.a.emplace_back((mask >> i) & 1u);
            for (std::size_t i = 0; i + 1 < n; ++i)
                inst.b.emplace_back((mask >> (n + i)) & 1u);
            const Solution bf = solve_bruteforce(inst);
            const Solution dp = solve_dp(inst);
            o.require(bf.cost == dp.cost && bf.p == dp.p,
                      "0/1 pattern " + std::to_string(mask) + " at N = " + std::to_string(n));
        }
    }
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        Instance inst;
        for (std::size_t i = 0; i < n; ++i)
            inst.a.push_back(oracle::random_rational(rng, 12, 5, true));
        for (std::size_t i = 0; i + 1 < n; ++i)
            inst.b.push_back(oracle::random_rational(rng, 12, 5, true));
        const Solution bf = solve_bruteforce(inst);
        const Solution dp = solve_dp(inst);
        o.require(bf.cost == dp.cost && bf.p == dp.p, "random trial " + std::to_string(trial));
    }
    return o;
}

Outcome roundtrips()
{
    Outcome o;
    std::mt19937_64 rng(7);
    for (std::size_t n = 1; n <= 8; ++n) {
        const Instance inst = oracle::random_book_instance(rng, n);
        for (AdmissibleEnumerator it(n); it.valid(); it.next()) {
            const ParentFunction p = it.current();
            const auto back = depth_to_parent(generation(p));
            o.require(back.has_value() && *back == p, "depth roundtrip fails at N = " + std::to_string(n));
            if (n < 2)
                continue;
            const SeriesPlan plan = tree_to_plan(p, inst);
            o.require(plan_to_tree(plan) == p, "plan roundtrip fails at N = " + std::to_string(n));
            o.require(replay(plan) == tree_cost(p, inst), "replay cost differs at N = " + std::to_string(n));
        }
    }
    return o;
}

Outcome kirchhoff_planarity()
{
    Outcome o;
    std::mt19937_64 rng(8);
    for (std::size_t n = 1; n <= 8; ++n) {
        const Instance inst = oracle::random_book_instance(rng, n);
        for (AdmissibleEnumerator it(n); it.valid(); it.next()) {
            const TransportGraph g = build_graph(it.current(), inst);
            o.require(kirchhoff_check(g, inst), "Kirchhoff fails at N = " + std::to_string(n));
            o.require(is_planar_layering(g), "crossing edges at N = " + std::to_string(n));
        }
    }
    return o;
}

Outcome lower_bound_dominance()
{
    Outcome o;
    const Rational kappa(1, 3);
    std::string record;
    for (std::size_t k : {2, 4, 8, 16, 32, 64}) {
        const Rational eps(1, static_cast<long>(k)); // two blocks of width 1/(2k)
        const BoundReport r = compare_bound(uniform_alternating(k), kappa, eps);
        o.require(r.bound_value <= r.optimal_cost, "bound exceeds cost at k = " + std::to_string(k));
        char buf[96];
        std::snprintf(buf, sizeof buf, " k=%zu:%.4f", k, r.optimal_cost.get_d() / std::log2(2.0 * static_cast<double>(k)));
        record += buf;
    }
    if (o.ok)
        o.detail = "cost/log2(2k)" + record;
    return o;
}

struct CFree {
    void operator()(char* s) const { bs_string_free(s); }
};

std::string c_string(bs_status st, char* s)
{
    std::unique_ptr<char, CFree> owned(s);
    if (st != BS_OK)
        return std::string("error: ") + bs_last_error();
    return s;
}

std::string solve_output()
{
    bs_instance* inst = nullptr;
    if (bs_instance_load(BOOKSHIFT_DATA_DIR "/example1.json", &inst) != BS_OK)
        return std::string("error: ") + bs_last_error();
    std::string out;
    for (bs_method m : {BS_METHOD_DP, BS_METHOD_BRUTE_FORCE}) {
        bs_solution* sol = nullptr;
        if (bs_solve(inst, m, 0, 4, &sol) != BS_OK) {
            out += std::string("error: ") + bs_last_error();
            continue;
        }
        char* js = nullptr;
        const bs_status st = bs_solution_json(sol, &js);
        out += c_string(st, js);
        bs_solution_free(sol);
    }
    bs_instance_free(inst);
    return out;
}

std::string bench_output()
{
    const std::size_t ks[] = {2, 4, 8, 16, 32, 64};
    char* csv = nullptr;
    const bs_status st = bs_bench(ks, 6, &csv);
    return c_string(st, csv);
}

std::string dot_output()
{
    const std::string dot = to_dot(build_graph(ParentFunction({2, 4, 4, 6, 6, 6}), example1));
    bs_instance* inst = nullptr;
    if (bs_instance_load(BOOKSHIFT_DATA_DIR "/example1.json", &inst) != BS_OK)
        return std::string("error: ") + bs_last_error();
    const std::size_t p[] = {2, 4, 4, 6, 6, 6};
    char* out = nullptr;
    const bs_status st = bs_export_dot(inst, p, 6, &out);
    const std::string via_c = c_string(st, out);
    bs_instance_free(inst);
    return dot + via_c;
}

Outcome determinism()
{
    Outcome o;
    const std::string solve = solve_output();
    const std::string bench = bench_output();
    const std::string dot = dot_output();
    o.require(solve.find("error") == std::string::npos, solve);
    o.require(bench.find("error") == std::string::npos, bench);
    o.require(dot.find("error") == std::string::npos, dot);
    for (int run = 0; run < 3; ++run) {
        o.require(solve_output() == solve, "solve output changed between runs");
        o.require(bench_output() == bench, "bench output changed between runs");
        o.require(dot_output() == dot, "DOT output changed between runs");
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "worked example replay costs 142", 1, example_replay},
        {2, "cost decomposition coefficients", 1, cost_decomposition},
        {3, "two-pair instance optimum 17, value 14 unreachable", 1, two_pair_instance},
        {4, "Catalan counts and recurrence", 60, catalan_counts},
        {5, "(3,4,4,4) inadmissible and not enumerated", 1, inadmissible_example},
        {6, "interval DP equals brute force", 120, oracle_equivalence},
        {7, "depth and plan roundtrips", 60, roundtrips},
        {8, "Kirchhoff balance and planarity", 30, kirchhoff_planarity},
        {9, "lower bound below normalized optimum", 120, lower_bound_dominance},
        {10, "deterministic solve, bench and DOT output", 30, determinism},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs >= c.limit_s) {
            o.ok = false;
            o.detail = "time limit exceeded";
        }
        std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_s, o.detail.empty() ? "" : " - ", o.detail.c_str());
        if (!o.ok)
            ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

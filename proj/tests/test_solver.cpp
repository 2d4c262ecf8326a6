#include "bookshift/error.hpp"
#include "bookshift/solver.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bookshift;

namespace {

Rational q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Rational> ints(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

const Instance example1{ints({12, 7, 5, 4, 14, 0}), ints({5, 10, 17, 5, 5})};
const Instance two_pair{ints({5, 1, 0}), ints({1, 5})};

// Exhaustive minimum over the filtered list, lex-min on ties; no shared code
// with the solvers beyond tree_cost, which is itself checked against the
// edge-sum oracle.
std::pair<Rational, std::vector<std::size_t>> oracle_optimum(const Instance& inst)
{
    Rational best;
    std::vector<std::size_t> arg;
    for (const auto& p : oracle::admissible_by_filter(inst.size())) {
        const Rational c = oracle::edge_sum_cost(p, inst);
        if (arg.empty() || c < best) {
            best = c;
            arg = p;
        }
    }
    return {best, arg};
}

Instance random_instance(std::mt19937_64& rng, std::size_t n)
{
    Instance inst;
    for (std::size_t i = 0; i < n; ++i)
        inst.a.push_back(oracle::random_rational(rng, 9, 4, true));
    for (std::size_t i = 0; i + 1 < n; ++i)
        inst.b.push_back(oracle::random_rational(rng, 9, 4, true));
    return inst;
}

} // namespace

TEST_CASE("small solved instances")
{
    const Solution bf = solve_bruteforce(two_pair);
    CHECK(bf.cost == 17);
    CHECK(bf.p.values() == std::vector<std::size_t>{2, 3, 3});
    CHECK(bf.method == SolveMethod::brute_force);
    CHECK(bf.nodes_explored == 2);

    const Solution dp = solve_dp(two_pair);
    CHECK(dp.cost == 17);
    CHECK(dp.p == bf.p);
    CHECK(dp.method == SolveMethod::interval_dp);

    const Instance two{{q(7, 3), q(0)}, {q(5, 2)}};
    CHECK(solve_bruteforce(two).cost == q(29, 6));
    CHECK(solve_dp(two).cost == q(29, 6));
    CHECK(solve_dp(two).p.values() == std::vector<std::size_t>{2, 2});

    const Instance one{{q(4)}, {}};
    CHECK(solve_dp(one).cost == 0);
    CHECK(solve_bruteforce(one).cost == 0);

    CHECK(to_string(SolveMethod::brute_force) == "brute-force");
    CHECK(to_string(SolveMethod::interval_dp) == "interval-dp");
}

TEST_CASE("worked example optimum")
{
    const auto [cost, arg] = oracle_optimum(example1);
    const Solution bf = solve_bruteforce(example1);
    const Solution dp = solve_dp(example1);
    CHECK(bf.nodes_explored == 42);
    CHECK(bf.cost == cost);
    CHECK(bf.p.values() == arg);
    CHECK(dp.cost == cost);
    CHECK(dp.p.values() == arg);
    CHECK(cost <= 142);
}

TEST_CASE("dp equals brute force on every 0/1 pattern")
{
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
            CHECK(bf.cost == dp.cost);
            CHECK(bf.p == dp.p);
        }
    }
}

TEST_CASE("dp equals brute force on random rational instances")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        const Instance inst = random_instance(rng, n);
        const Solution bf = solve_bruteforce(inst);
        const Solution dp = solve_dp(inst);
        CHECK(bf.cost == dp.cost);
        CHECK(bf.p == dp.p);
        CHECK(dp.cost == tree_cost(dp.p, inst));
        if (n <= 8) {
            const auto [cost, arg] = oracle_optimum(inst);
            CHECK(bf.cost == cost);
            CHECK(bf.p.values() == arg);
        }
    }
}

TEST_CASE("local optimality certificate")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        const Instance inst = random_instance(rng, n);
        const Solution sol = solve_dp(inst);
        for (std::size_t i = 1; i < n; ++i) {
            for (std::size_t v = i + 1; v <= n; ++v) {
                auto p = sol.p.values();
                p[i - 1] = v;
                const ParentFunction f(p);
                if (is_admissible(f))
                    CHECK(tree_cost(f, inst) >= sol.cost);
            }
        }
    }
}

TEST_CASE("scale equivariance and monotonicity")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 11)(rng);
        const Instance inst = random_instance(rng, n);
        const Solution base = solve_dp(inst);

        const Rational lambda = oracle::random_rational(rng, 12, 7);
        Instance scaled = inst;
        for (auto& x : scaled.a)
            x *= lambda;
        for (auto& x : scaled.b)
            x *= lambda;
        const Solution s = solve_dp(scaled);
        CHECK(s.cost == base.cost * lambda);
        CHECK(s.p == base.p);

        const std::size_t gap = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
        Instance bumped = inst;
        bumped.b[gap] += oracle::random_rational(rng, 5, 3);
        CHECK(solve_dp(bumped).cost >= base.cost);
    }
}

TEST_CASE("parallel brute force is deterministic")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 10)(rng);
        // Small integer masses produce many ties, which is the interesting case.
        Instance inst;
        for (std::size_t i = 0; i < n; ++i)
            inst.a.emplace_back(std::uniform_int_distribution<int>(0, 1)(rng));
        for (std::size_t i = 0; i + 1 < n; ++i)
            inst.b.emplace_back(std::uniform_int_distribution<int>(0, 1)(rng));
        const Solution serial = solve_bruteforce(inst);
        for (unsigned threads : {2u, 3u, 8u}) {
            const Solution par = solve_bruteforce(inst, {false, threads});
            CHECK(par.cost == serial.cost);
            CHECK(par.p == serial.p);
            CHECK(par.nodes_explored == serial.nodes_explored);
        }
    }
}

TEST_CASE("brute force capacity guard")
{
    const Instance big = uniform_alternating(16);
    CHECK(big.size() == 17);
    CHECK_THROWS_AS(solve_bruteforce(big), Error);
    try {
        (void)solve_bruteforce(big);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::capacity);
    }
    CHECK(solve_dp(big).cost > 0);
}

TEST_CASE("compare_bound")
{
    const Instance alt = uniform_alternating(8);
    const BoundReport r = compare_bound(alt, q(1, 3), q(1, 8));
    CHECK(r.scale == 16);
    CHECK(r.s == q(1, 2));
    CHECK(r.optimal_cost == solve_dp(alt).cost / 16);
    CHECK(r.bound_value == proof_lower_bound(q(1, 3), q(1, 8), q(1, 2)));
    CHECK(r.bound_value <= r.optimal_cost);
    CHECK(r.ratio == r.bound_value / r.optimal_cost);

    // Widest admissible window, eps = s: every increment of g is <= 0, so g(0) = 0 wins.
    const BoundReport wide = compare_bound(uniform_alternating(2), q(1, 4), q(1, 2));
    CHECK(wide.bound_value == 0);
    CHECK(wide.argmax == 0);
    CHECK(wide.bound_value <= wide.optimal_cost);
    CHECK_THROWS_AS(compare_bound(uniform_alternating(2), q(1, 4), q(1)), Error);

    const Instance single{{q(1), q(0)}, {q(1)}};
    CHECK_THROWS_AS(compare_bound(single, q(1, 3), q(1, 4)), Error);
}

TEST_CASE("lower bound never exceeds the optimum on mixed instances")
{
    std::mt19937_64 rng(47);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        Instance inst;
        for (std::size_t i = 0; i < k; ++i) {
            inst.a.emplace_back(std::uniform_int_distribution<int>(1, 3)(rng));
            inst.b.emplace_back(std::uniform_int_distribution<int>(1, 3)(rng));
        }
        inst.a.emplace_back(0);
        const Rational kappa(1, std::uniform_int_distribution<int>(3, 8)(rng));
        const Rational eps(1, std::uniform_int_distribution<int>(1, 6)(rng));
        try {
            const BoundReport r = compare_bound(inst, kappa, eps);
            CHECK(r.bound_value <= r.optimal_cost);
            ++checked;
        } catch (const Error& e) {
            const BinaryDensity rho = instance_to_density(inst);
            if (e.kind() == ErrorKind::range) {
                CHECK(eps > 1 - total_mass(rho));
            } else {
                CHECK(e.kind() == ErrorKind::semantic);
                CHECK_FALSE(is_kappa_mixed(rho, kappa, eps));
            }
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("scaling experiment")
{
    const auto rows = scaling_experiment({1, 2, 4});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].normalized_cost == 1);
    CHECK(rows[0].total_length == 2);

    // k = 2: a = (1,1,0), b = (1,1). Trees (2,3,3) and (3,3,3).
    const Instance two = uniform_alternating(2);
    CHECK(two == Instance{ints({1, 1, 0}), ints({1, 1})});
    const Rational chain = oracle::edge_sum_cost({2, 3, 3}, two);
    const Rational star = oracle::edge_sum_cost({3, 3, 3}, two);
    CHECK(rows[1].optimal_cost == std::min(chain, star));
    CHECK(rows[1].normalized_cost == std::min(chain, star) / 4);
    CHECK(rows[1].normalized_cost == q(5, 4));

    const std::string csv = scaling_csv(rows);
    CHECK(csv.rfind("k,total_length,optimal_cost,normalized_cost,log2_len,ratio\n", 0) == 0);
    CHECK(csv.find("\n2,4,5,5/4,2.000000,0.625000\n") != std::string::npos);
    CHECK_THROWS_AS(scaling_experiment({0}), Error);
}

#include "bookshift/solver.hpp"

#include "bookshift/density.hpp"
#include "bookshift/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

namespace bookshift {

std::string_view to_string(SolveMethod method)
{
    return method == SolveMethod::brute_force ? "brute-force" : "interval-dp";
}

namespace {

struct Best {
    std::vector<std::size_t> p;
    Rational cost;
    unsigned long long explored = 0;
};

// Lexicographic scan is strict-improvement only, so the first optimum found is lex-min.
Best scan(AdmissibleEnumerator it, const Instance& inst)
{
    Best best;
    for (; it.valid(); it.next()) {
        ++best.explored;
        Rational c = tree_cost_unchecked(ParentFunction(it.current_values()), inst);
        if (best.p.empty() || c < best.cost) {
            best.cost = std::move(c);
            best.p = it.current_values();
        }
    }
    return best;
}

} // namespace

Solution solve_bruteforce(const Instance& inst, const BruteForceOptions& options)
{
    inst.check();
    const std::size_t n = inst.size();
    if (n > brute_force_limit && !options.allow_large)
        fail(ErrorKind::capacity, "brute force refuses N = " + std::to_string(n) + " > " +
                                      std::to_string(brute_force_limit) + " (" + to_string(catalan(n - 1)) +
                                      " trees); use the interval DP or override");
    if (n == 1)
        return {ParentFunction({1}), Rational(0), SolveMethod::brute_force, 1};

    std::vector<Best> parts;
    if (options.threads <= 1) {
        parts.push_back(scan(AdmissibleEnumerator(n), inst));
    } else {
        // One slice per value of P(1); slices are merged in P(1) order.
        parts.resize(n - 1);
        std::vector<std::thread> pool;
        std::size_t next_slice = 0;
        std::mutex lock;
        const unsigned workers = std::min<unsigned>(options.threads, static_cast<unsigned>(n - 1));
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t slice;
                    {
                        std::scoped_lock guard(lock);
                        if (next_slice == n - 1)
                            return;
                        slice = next_slice++;
                    }
                    parts[slice] = scan(AdmissibleEnumerator(n, slice + 2), inst);
                }
            });
        }
        for (auto& t : pool)
            t.join();
    }

    Best best = std::move(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i) {
        best.explored += parts[i].explored;
        if (parts[i].cost < best.cost || (parts[i].cost == best.cost && parts[i].p < best.p)) {
            best.cost = parts[i].cost;
            best.p = std::move(parts[i].p);
        }
    }
    return {ParentFunction(std::move(best.p)), std::move(best.cost), SolveMethod::brute_force, best.explored};
}

Solution solve_dp(const Instance& inst)
{
    inst.check();
    const std::size_t n = inst.size();
    if (n == 1)
        return {ParentFunction({1}), Rational(0), SolveMethod::interval_dp, 1};

    // Prefix sums; sa[i] = a_1 + ... + a_i, sb likewise.
    std::vector<Rational> sa(n + 1, 0), sb(n, 0);
    for (std::size_t i = 1; i <= n; ++i)
        sa[i] = sa[i - 1] + inst.a[i - 1];
    for (std::size_t i = 1; i < n; ++i)
        sb[i] = sb[i - 1] + inst.b[i - 1];

    auto at = [n](std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); };
    std::vector<Rational> f(n * n, 0);
    std::vector<std::size_t> split(n * n, 0);
    unsigned long long explored = 0;

    // Writes P(s) for s in [i, j) into out (1-based positions).
    auto fill = [&](auto&& self, std::size_t i, std::size_t j, std::vector<std::size_t>& out) -> void {
        if (i == j)
            return;
        const std::size_t s = split[at(i, j)];
        self(self, i, s, out);
        out[s - 1] = j;
        self(self, s + 1, j, out);
    };

    std::vector<std::size_t> scratch(n, 0), best_vec(n, 0);
    std::vector<std::size_t> ties;
    Rational candidate;
    for (std::size_t len = 1; len < n; ++len) {
        for (std::size_t i = 1; i + len <= n; ++i) {
            const std::size_t j = i + len;
            Rational best;
            ties.clear();
            for (std::size_t s = i; s < j; ++s) {
                ++explored;
                candidate = f[at(i, s)] + (sa[s] - sa[i - 1]) + (sb[j - 1] - sb[s - 1]) + f[at(s + 1, j)];
                if (ties.empty() || candidate < best) {
                    best = candidate;
                    ties.assign(1, s);
                } else if (candidate == best) {
                    ties.push_back(s);
                }
            }
            f[at(i, j)] = best;
            split[at(i, j)] = ties.front();
            if (ties.size() > 1) {
                fill(fill, i, j, best_vec);
                for (std::size_t t = 1; t < ties.size(); ++t) {
                    split[at(i, j)] = ties[t];
                    fill(fill, i, j, scratch);
                    if (std::lexicographical_compare(scratch.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                                     scratch.begin() + static_cast<std::ptrdiff_t>(j - 1),
                                                     best_vec.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                                     best_vec.begin() + static_cast<std::ptrdiff_t>(j - 1)))
                        std::swap(scratch, best_vec), std::swap(ties.front(), ties[t]);
                }
                split[at(i, j)] = ties.front();
            }
        }
    }

    std::vector<std::size_t> p(n, n);
    fill(fill, 1, n, p);
    return {ParentFunction(std::move(p)), f[at(1, n)], SolveMethod::interval_dp, explored};
}

BoundReport compare_bound(const Instance& inst, const Rational& kappa, const Rational& eps)
{
    const BinaryDensity rho = instance_to_density(inst);
    if (!is_kappa_mixed(rho, kappa, eps))
        fail(ErrorKind::semantic, "density is not " + to_string(kappa) + "-mixed at scale " + to_string(eps));

    BoundReport report;
    report.scale = instance_length(inst);
    report.optimal_cost = solve_dp(inst).cost / report.scale;
    report.kappa = kappa;
    report.eps = eps;
    report.s = 1 - total_mass(rho);
    const LowerBound lb = proof_lower_bound_detail(kappa, eps, report.s);
    report.bound_value = lb.value;
    report.argmax = lb.argmax;
    report.ratio = report.optimal_cost == 0 ? Rational(0) : Rational(report.bound_value / report.optimal_cost);
    if (report.bound_value > report.optimal_cost)
        fail(ErrorKind::semantic, "lower bound " + to_string(report.bound_value) + " exceeds optimal cost " +
                                      to_string(report.optimal_cost));
    return report;
}

Instance uniform_alternating(std::size_t k)
{
    if (k == 0)
        fail(ErrorKind::range, "alternating instance needs k >= 1");
    Instance inst{std::vector<Rational>(k, Rational(1)), std::vector<Rational>(k, Rational(1))};
    inst.a.emplace_back(0);
    return inst;
}

std::vector<ScalingRow> scaling_experiment(const std::vector<std::size_t>& k_list)
{
    std::vector<ScalingRow> rows;
    for (std::size_t k : k_list) {
        const Instance inst = uniform_alternating(k);
        ScalingRow row;
        row.k = k;
        row.total_length = instance_length(inst);
        row.optimal_cost = solve_dp(inst).cost;
        row.normalized_cost = row.optimal_cost / row.total_length;
        row.log2_length = std::log2(row.total_length.get_d());
        row.ratio = row.log2_length > 0 ? row.normalized_cost.get_d() / row.log2_length : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows)
{
    std::string out = "k,total_length,optimal_cost,normalized_cost,log2_len,ratio\n";
    char buf[64];
    for (const auto& r : rows) {
        out += std::to_string(r.k) + "," + to_string(r.total_length) + "," + to_string(r.optimal_cost) + "," +
               to_string(r.normalized_cost) + ",";
        std::snprintf(buf, sizeof buf, "%.6f,%.6f\n", r.log2_length, r.ratio);
        out += buf;
    }
    return out;
}

} // namespace bookshift

#pragma once

#include "bookshift/rational.hpp"
#include "bookshift/series.hpp"
#include "bookshift/trees.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace bookshift {

enum class SolveMethod { brute_force, interval_dp };

std::string_view to_string(SolveMethod method);

struct Solution {
    ParentFunction p;
    Rational cost;
    SolveMethod method;
    unsigned long long nodes_explored = 0;
};

/// Largest N the enumerating solver accepts without an override (C_15 trees).
inline constexpr std::size_t brute_force_limit = 16;

struct BruteForceOptions {
    bool allow_large = false;
    /// 0 or 1 runs serially; more splits the scan by P(1) across threads.
    unsigned threads = 1;
};

/// Minimum of tree_cost over every admissible tree, lexicographically
/// smallest P on ties. Throws Error(capacity) for N > brute_force_limit
/// unless allow_large is set.
Solution solve_bruteforce(const Instance& inst, const BruteForceOptions& options = {});

/// Interval recurrence over subtrees: f(i,i) = 0 and
///   f(i,j) = min_{i <= s < j} f(i,s) + A[i..s] + B[s..j-1] + f(s+1,j),
/// where [i..s] is the leftmost child subtree of j, rooted at s. O(N^3).
/// Among optimal splits the one whose reconstructed P is lexicographically
/// smallest is kept, so the result matches solve_bruteforce exactly.
Solution solve_dp(const Instance& inst);

struct BoundReport {
    Rational optimal_cost; // normalized to unit stack length
    Rational bound_value;
    Rational kappa;
    Rational eps;
    Rational s;     // 1 - m
    Rational ratio; // bound / optimal, 0 when optimal is 0
    Rational scale; // stack length used for normalization
    unsigned long argmax = 0;
};

/// Solves inst, normalizes the cost by its stack length and compares it with
/// proof_lower_bound(kappa, eps, 1 - m). Error(semantic) when the normalized
/// density is not kappa-mixed at eps, or if the bound ever exceeds the cost.
BoundReport compare_bound(const Instance& inst, const Rational& kappa, const Rational& eps);

/// k unit white blocks alternating with k unit black blocks, plus the sink.
Instance uniform_alternating(std::size_t k);

struct ScalingRow {
    std::size_t k = 0;
    Rational total_length;
    Rational optimal_cost;
    Rational normalized_cost;
    double log2_length = 0;
    double ratio = 0;
};

std::vector<ScalingRow> scaling_experiment(const std::vector<std::size_t>& k_list);

/// "k,total_length,optimal_cost,normalized_cost,log2_len,ratio" plus one row per k.
std::string scaling_csv(const std::vector<ScalingRow>& rows);

} // namespace bookshift

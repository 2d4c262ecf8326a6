#pragma once

#include "bookshift/rational.hpp"
#include "bookshift/series.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace bookshift {

/// P : [N] -> [N] with P(i) > i for i < N and P(N) = N. Indices are 1-based
/// both in the accessors and in the stored values.
class ParentFunction {
public:
    /// Throws Error(semantic) unless the parent-function conditions hold.
    explicit ParentFunction(std::vector<std::size_t> parents);

    [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
    [[nodiscard]] std::size_t operator()(std::size_t i) const { return p_[i - 1]; }
    [[nodiscard]] const std::vector<std::size_t>& values() const noexcept { return p_; }

    /// Every P(i) = N.
    static ParentFunction star(std::size_t n);
    /// P(i) = i+1.
    static ParentFunction chain(std::size_t n);

    friend bool operator==(const ParentFunction&, const ParentFunction&) = default;
    friend auto operator<=>(const ParentFunction& l, const ParentFunction& r) { return l.p_ <=> r.p_; }

private:
    std::vector<std::size_t> p_;
};

using DepthVector = std::vector<std::size_t>;

/// No crossing: i < j < P(i) implies P(j) <= P(i). Linear time; the stack
/// holds the parents of still-open spans, smallest on top.
bool is_admissible(const ParentFunction& p);

/// The literal pairwise form of the same condition, O(N^2).
bool is_admissible_pairwise(const ParentFunction& p);

/// dep(N) = 0, dep(i) = dep(P(i)) + 1.
DepthVector generation(const ParentFunction& p);

/// cost = sum_i alpha_i * a_i + sum_i beta_i * b_i, with alpha_i = dep(i) and
/// beta_i = #{j <= i : P(j) > i}, i = 1..N-1.
struct CostCoefficients {
    std::vector<std::size_t> alpha;
    std::vector<std::size_t> beta;
};
CostCoefficients cost_coefficients(const ParentFunction& p);

/// Throws Error(semantic) if P is not admissible or sizes disagree.
Rational tree_cost(const ParentFunction& p, const Instance& inst);

/// Same value without the admissibility check; used by the enumerating solver.
Rational tree_cost_unchecked(const ParentFunction& p, const Instance& inst);

/// Iterates all admissible parent functions on [N] in lexicographic order.
///
///     for (AdmissibleEnumerator it(n); it.valid(); it.next()) use(it.current());
///
/// Position j ranges over (j, m_j], where m_j is the smallest P(i) > j among
/// i < j (or N). Fixing a prefix restricts the walk to one first-child split.
class AdmissibleEnumerator {
public:
    explicit AdmissibleEnumerator(std::size_t n);

    /// Restricts to functions with P(1) = first_parent (2 <= first_parent <= n, n >= 2).
    AdmissibleEnumerator(std::size_t n, std::size_t first_parent);

    [[nodiscard]] bool valid() const noexcept { return valid_; }
    [[nodiscard]] const std::vector<std::size_t>& current_values() const noexcept { return p_; }
    [[nodiscard]] ParentFunction current() const { return ParentFunction(p_); }
    void next();

private:
    std::size_t bound(std::size_t j) const;

    std::size_t n_;
    std::size_t fixed_; // number of leading positions that never change
    std::vector<std::size_t> p_;
    bool valid_ = true;
};

std::vector<ParentFunction> enumerate_admissible(std::size_t n);
unsigned long long count_admissible(std::size_t n);

/// binom(2n, n) / (n + 1).
BigInt catalan(unsigned long n);

/// Rebuilds the unique admissible P with generation(P) = d by peeling levels:
/// each node of depth L attaches to the nearest node of depth L-1 on its
/// right. Returns nullopt when no admissible P induces d.
std::optional<ParentFunction> depth_to_parent(const DepthVector& d);

/// A move sequence realizing the tree. At each step the eligible moves are
/// leaves whose parent is the next surviving node; the deepest, then
/// leftmost, is taken. inst must be a book instance (a_N = 0, others > 0).
SeriesPlan tree_to_plan(const ParentFunction& p, const Instance& inst);

/// Records who merged into whom while replaying the plan.
ParentFunction plan_to_tree(const SeriesPlan& plan);

/// Book instance back to the series it came from; requires a_N = 0 and all
/// other entries positive.
AlternatingSeries instance_to_series(const Instance& inst);

} // namespace bookshift

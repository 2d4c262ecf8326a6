#include "bookshift/trees.hpp"

#include "bookshift/error.hpp"

#include <algorithm>

namespace bookshift {

ParentFunction::ParentFunction(std::vector<std::size_t> parents) : p_(std::move(parents))
{
    const std::size_t n = p_.size();
    if (n == 0)
        fail(ErrorKind::semantic, "parent function needs at least one node");
    for (std::size_t i = 1; i < n; ++i) {
        if (p_[i - 1] <= i || p_[i - 1] > n)
            fail(ErrorKind::semantic, "P(" + std::to_string(i) + ") = " + std::to_string(p_[i - 1]) +
                                          " must lie in (" + std::to_string(i) + ", " + std::to_string(n) + "]");
    }
    if (p_.back() != n)
        fail(ErrorKind::semantic, "P(N) must equal N = " + std::to_string(n));
}

ParentFunction ParentFunction::star(std::size_t n) { return ParentFunction(std::vector<std::size_t>(n, n)); }

ParentFunction ParentFunction::chain(std::size_t n)
{
    std::vector<std::size_t> p(n);
    for (std::size_t i = 1; i <= n; ++i)
        p[i - 1] = std::min(i + 1, n);
    return ParentFunction(std::move(p));
}

bool is_admissible(const ParentFunction& p)
{
    std::vector<std::size_t> open;
    for (std::size_t j = 1; j < p.size(); ++j) {
        while (!open.empty() && open.back() <= j)
            open.pop_back();
        if (!open.empty() && p(j) > open.back())
            return false;
        open.push_back(p(j));
    }
    return true;
}

bool is_admissible_pairwise(const ParentFunction& p)
{
    for (std::size_t i = 1; i <= p.size(); ++i)
        for (std::size_t j = i + 1; j <= p.size(); ++j)
            if (j < p(i) && p(j) > p(i))
                return false;
    return true;
}

DepthVector generation(const ParentFunction& p)
{
    DepthVector dep(p.size(), 0);
    for (std::size_t i = p.size() - 1; i >= 1; --i)
        dep[i - 1] = dep[p(i) - 1] + 1;
    return dep;
}

CostCoefficients cost_coefficients(const ParentFunction& p)
{
    const std::size_t n = p.size();
    CostCoefficients c{generation(p), std::vector<std::size_t>(n - 1, 0)};
    c.alpha.pop_back();
    // Edge i -> P(i) spans gaps i .. P(i)-1.
    std::vector<long long> diff(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i) {
        ++diff[i];
        --diff[p(i)];
    }
    long long running = 0;
    for (std::size_t i = 1; i < n; ++i) {
        running += diff[i];
        c.beta[i - 1] = static_cast<std::size_t>(running);
    }
    return c;
}

Rational tree_cost_unchecked(const ParentFunction& p, const Instance& inst)
{
    const auto c = cost_coefficients(p);
    Rational cost = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        cost += inst.a[i] * c.alpha[i];
        cost += inst.b[i] * c.beta[i];
    }
    return cost;
}

Rational tree_cost(const ParentFunction& p, const Instance& inst)
{
    inst.check();
    if (inst.size() != p.size())
        fail(ErrorKind::semantic, "parent function has " + std::to_string(p.size()) + " nodes, instance has " +
                                      std::to_string(inst.size()));
    if (!is_admissible(p))
        fail(ErrorKind::semantic, "parent function is not admissible (edges cross)");
    return tree_cost_unchecked(p, inst);
}

AdmissibleEnumerator::AdmissibleEnumerator(std::size_t n) : n_(n), fixed_(0), p_(n)
{
    if (n == 0)
        fail(ErrorKind::range, "enumeration needs N >= 1");
    for (std::size_t i = 1; i <= n; ++i)
        p_[i - 1] = std::min(i + 1, n);
}

AdmissibleEnumerator::AdmissibleEnumerator(std::size_t n, std::size_t first_parent) : AdmissibleEnumerator(n)
{
    if (n < 2 || first_parent < 2 || first_parent > n)
        fail(ErrorKind::range, "first parent " + std::to_string(first_parent) + " invalid for N = " +
                                   std::to_string(n));
    p_[0] = first_parent;
    fixed_ = 1;
}

std::size_t AdmissibleEnumerator::bound(std::size_t j) const
{
    std::size_t m = n_;
    for (std::size_t i = 1; i < j; ++i)
        if (p_[i - 1] > j)
            m = std::min(m, p_[i - 1]);
    return m;
}

void AdmissibleEnumerator::next()
{
    if (!valid_)
        return;
    for (std::size_t j = n_ - 1; j > fixed_; --j) {
        if (p_[j - 1] < bound(j)) {
            ++p_[j - 1];
            for (std::size_t k = j + 1; k < n_; ++k)
                p_[k - 1] = k + 1;
            return;
        }
    }
    valid_ = false;
}

std::vector<ParentFunction> enumerate_admissible(std::size_t n)
{
    std::vector<ParentFunction> out;
    for (AdmissibleEnumerator it(n); it.valid(); it.next())
        out.push_back(it.current());
    return out;
}

unsigned long long count_admissible(std::size_t n)
{
    unsigned long long count = 0;
    for (AdmissibleEnumerator it(n); it.valid(); it.next())
        ++count;
    return count;
}

BigInt catalan(unsigned long n)
{
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    c /= n + 1;
    return c;
}

std::optional<ParentFunction> depth_to_parent(const DepthVector& d)
{
    const std::size_t n = d.size();
    if (n == 0 || d.back() != 0)
        return std::nullopt;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (d[i] == 0)
            return std::nullopt;

    std::vector<std::size_t> p(n, 0);
    p[n - 1] = n;
    const std::size_t depth = *std::max_element(d.begin(), d.end());
    for (std::size_t level = 1; level <= depth; ++level) {
        std::size_t next_parent = 0; // nearest index to the right with depth level-1
        for (std::size_t i = n; i >= 1; --i) {
            if (d[i - 1] == level - 1) {
                next_parent = i;
            } else if (d[i - 1] == level) {
                if (next_parent == 0)
                    return std::nullopt;
                p[i - 1] = next_parent;
            }
        }
    }
    ParentFunction candidate(std::move(p));
    if (!is_admissible(candidate) || generation(candidate) != d)
        return std::nullopt;
    return candidate;
}

AlternatingSeries instance_to_series(const Instance& inst)
{
    inst.check();
    if (inst.a.back() != 0)
        fail(ErrorKind::semantic, "book instance needs a zero-mass sink (a_N = 0)");
    std::vector<Rational> white(inst.a.begin(), inst.a.end() - 1);
    return {std::move(white), inst.b};
}

SeriesPlan tree_to_plan(const ParentFunction& p, const Instance& inst)
{
    if (inst.size() != p.size())
        fail(ErrorKind::semantic, "parent function and instance sizes differ");
    if (!is_admissible(p))
        fail(ErrorKind::semantic, "parent function is not admissible (edges cross)");
    SeriesPlan plan{instance_to_series(inst), {}};

    const std::size_t n = p.size();
    const DepthVector dep = generation(p);
    std::vector<std::size_t> pending_children(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i)
        ++pending_children[p(i)];
    std::vector<std::size_t> alive; // surviving non-root nodes, in order
    for (std::size_t i = 1; i < n; ++i)
        alive.push_back(i);

    while (!alive.empty()) {
        std::size_t pick = alive.size();
        for (std::size_t pos = 0; pos < alive.size(); ++pos) {
            const std::size_t node = alive[pos];
            const std::size_t right = pos + 1 < alive.size() ? alive[pos + 1] : n;
            if (pending_children[node] != 0 || p(node) != right)
                continue;
            if (pick == alive.size() || dep[node - 1] > dep[alive[pick] - 1])
                pick = pos;
        }
        // An admissible tree always has an eligible leaf: follow rightmost
        // children down from the node just left of the root.
        if (pick == alive.size())
            fail(ErrorKind::semantic, "no realizable move; parent function is not admissible");
        const std::size_t node = alive[pick];
        --pending_children[p(node)];
        plan.moves.push_back(pick + 1);
        alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return plan;
}

ParentFunction plan_to_tree(const SeriesPlan& plan)
{
    const ReplayTrace trace = replay_trace(plan);
    const std::size_t n = plan.initial.pairs() + 1;
    std::vector<std::size_t> p(n, 0);
    p[n - 1] = n;
    for (std::size_t t = 0; t < trace.children.size(); ++t)
        p[trace.children[t] - 1] = trace.parents[t];
    return ParentFunction(std::move(p));
}

} // namespace bookshift

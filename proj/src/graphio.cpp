#include "bookshift/graphio.hpp"

#include "bookshift/error.hpp"

#include <map>
#include <sstream>

namespace bookshift {

TransportGraph build_graph(const ParentFunction& p, const Instance& inst)
{
    inst.check();
    if (inst.size() != p.size())
        fail(ErrorKind::semantic, "parent function and instance sizes differ");
    if (!is_admissible(p))
        fail(ErrorKind::semantic, "parent function is not admissible (edges cross)");

    const std::size_t n = p.size();
    const DepthVector dep = generation(p);
    std::vector<Rational> subtree(inst.a.begin(), inst.a.end());
    subtree[n - 1] = 0;
    // Children precede parents, so a left-to-right sweep accumulates subtrees.
    for (std::size_t i = 1; i < n; ++i)
        subtree[p(i) - 1] += subtree[i - 1];

    TransportGraph g;
    Rational x = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        g.vertices.push_back({i, dep[i - 1], x, subtree[i - 1]});
        if (i < n)
            x += inst.a[i - 1] + inst.b[i - 1];
    }
    for (std::size_t i = 1; i < n; ++i) {
        Rational length = 0;
        for (std::size_t k = i; k < p(i); ++k)
            length += inst.b[k - 1];
        g.edges.push_back({i, p(i), subtree[i - 1], std::move(length)});
    }
    return g;
}

bool kirchhoff_check(const TransportGraph& g, const Instance& inst)
{
    const std::size_t n = inst.size();
    if (g.vertices.size() != n)
        return false;
    std::vector<Rational> out(n + 1, 0), in(n + 1, 0);
    for (const auto& e : g.edges) {
        if (e.source < 1 || e.source > n || e.target < 1 || e.target > n)
            return false;
        out[e.source] += e.weight;
        in[e.target] += e.weight;
    }
    Rational demand = 0;
    for (std::size_t i = 1; i < n; ++i)
        demand += inst.a[i - 1];
    for (std::size_t v = 1; v <= n; ++v) {
        const Rational expected = v < n ? Rational(in[v] + inst.a[v - 1]) : Rational(in[v] - demand);
        if (out[v] != expected)
            return false;
    }
    return true;
}

Rational graph_cost(const TransportGraph& g)
{
    Rational cost = 0;
    for (const auto& e : g.edges)
        cost += e.weight + e.length;
    return cost;
}

bool is_planar_layering(const TransportGraph& g)
{
    for (const auto& e : g.edges)
        for (const auto& f : g.edges)
            if (e.source < f.source && f.source < e.target && e.target < f.target)
                return false;
    return true;
}

bool is_rooted_tree(const TransportGraph& g)
{
    const std::size_t n = g.vertices.size();
    if (n == 0 || g.edges.size() != n - 1)
        return false;
    std::vector<std::size_t> parent(n + 1, 0);
    for (const auto& e : g.edges) {
        if (e.source < 1 || e.source >= n || e.target > n || parent[e.source] != 0)
            return false;
        parent[e.source] = e.target;
    }
    for (std::size_t v = 1; v < n; ++v) {
        std::size_t cur = v;
        for (std::size_t steps = 0; cur != n; ++steps) {
            if (steps > n || parent[cur] == 0)
                return false;
            cur = parent[cur];
        }
    }
    return true;
}

std::string to_dot(const TransportGraph& g)
{
    std::ostringstream os;
    os << "digraph transport {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    for (const auto& v : g.vertices)
        os << "  a" << v.id << " [label=\"a_" << v.id << " (" << to_string(v.mass) << ")\"];\n";

    std::map<std::size_t, std::vector<std::size_t>> layers;
    for (const auto& v : g.vertices)
        layers[v.layer].push_back(v.id);
    for (const auto& [layer, ids] : layers) {
        os << "  { rank=same;";
        for (std::size_t id : ids)
            os << " a" << id << ";";
        os << " } // generation " << layer << "\n";
    }
    for (const auto& e : g.edges)
        os << "  a" << e.source << " -> a" << e.target << " [label=\"" << to_string(e.weight) << "/"
           << to_string(e.length) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace bookshift

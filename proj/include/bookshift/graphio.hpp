#pragma once

#include "bookshift/rational.hpp"
#include "bookshift/series.hpp"
#include "bookshift/trees.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bookshift {

/// Layered branched transport tree on the line. Node i sits at
/// x_i = sum_{k<i} (a_k + b_k) on layer dep(i); every non-root node has one
/// edge to its parent carrying its whole subtree mass.
struct TransportGraph {
    struct Vertex {
        std::size_t id = 0;
        std::size_t layer = 0;
        Rational position;
        Rational mass; // subtree mass
    };
    struct Edge {
        std::size_t source = 0;
        std::size_t target = 0;
        Rational weight; // omega(e)
        Rational length; // d(e)
    };

    std::vector<Vertex> vertices; // sorted by id
    std::vector<Edge> edges;      // sorted by source
};

/// Throws Error(semantic) for an inadmissible P or mismatched sizes.
TransportGraph build_graph(const ParentFunction& p, const Instance& inst);

/// Flow balance at each vertex: outflow = inflow + a_v for v < N, and at the
/// root outflow = inflow - sum_{i<N} a_i. The root's own a_N never moves.
bool kirchhoff_check(const TransportGraph& g, const Instance& inst);

/// Sum over edges of omega(e) + d(e).
Rational graph_cost(const TransportGraph& g);

/// No pair of edges i -> P(i), j -> P(j) with i < j < P(i) < P(j).
bool is_planar_layering(const TransportGraph& g);

/// N-1 edges, every non-root vertex has exactly one outgoing edge, and every
/// vertex reaches the root.
bool is_rooted_tree(const TransportGraph& g);

/// Graphviz digraph: one rank=same group per layer, nodes "a<i>" labelled
/// "a_i (mass)", edges labelled "<omega>/<d>". Output is ordered by id.
std::string to_dot(const TransportGraph& g);

} // namespace bookshift

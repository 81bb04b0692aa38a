#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frank/error.hpp"

namespace frank {

/// Undirected simple graph on dense vertices 0..n-1.
///
/// The edge list is stored sorted lexicographically with u < v per edge; the
/// position of an edge in that list is its canonical index, and every bitset
/// in the library (orientations, deletable sets) is indexed by it. Instances
/// are immutable after construction and safe to share across threads.
class Graph {
public:
    struct Edge {
        int u, v; // u < v
        bool operator==(const Edge&) const = default;
        auto operator<=>(const Edge&) const = default;
    };

    Graph() = default;

    /// Canonicalizes and validates an edge list. Pairs may come in any order
    /// and orientation; loops and duplicates are rejected.
    static Graph build(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    /// Canonical index of edge {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    /// Neighbor set of v as a bitmask; requires n <= 64.
    std::uint64_t adjacency_mask(int v) const;

    bool is_regular(int d) const;
    bool is_cubic() const { return is_regular(3); }
    int max_degree() const;
    int min_degree() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::int16_t> edge_index_; // n*n lookup, -1 where absent
};

/// Spec operation build_graph: see Graph::build.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
    return Graph::build(n, pairs);
}

} // namespace frank

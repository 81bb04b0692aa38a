#include "frank/graph.hpp"

#include <algorithm>

#include "frank/bits.hpp"

namespace frank {

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) raise(errc::vertex_out_of_range, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            raise(errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) raise(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.push_back({u, v});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        raise(errc::duplicate_edge,
              "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") appears twice");

    g.adj_.assign(static_cast<size_t>(n), {});
    g.edge_index_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    for (size_t i = 0; i < g.edges_.size(); ++i) {
        auto [u, v] = g.edges_[i];
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
        g.edge_index_[static_cast<size_t>(u) * n + v] = static_cast<std::int16_t>(i);
        g.edge_index_[static_cast<size_t>(v) * n + u] = static_cast<std::int16_t>(i);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
    return edge_index_[static_cast<size_t>(u) * n_ + v];
}

std::uint64_t Graph::adjacency_mask(int v) const {
    if (n_ > 64) raise(errc::space_too_large, "adjacency_mask needs n <= 64");
    std::uint64_t m = 0;
    for (int w : adj_[static_cast<size_t>(v)]) m |= bit(w);
    return m;
}

bool Graph::is_regular(int d) const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != d) return false;
    return true;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

} // namespace frank

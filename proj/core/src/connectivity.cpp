#include "frank/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace frank {

namespace {

std::vector<int> bfs_component(const Graph& g, int start, std::vector<char>& seen) {
    std::vector<int> comp, queue{start};
    seen[static_cast<size_t>(start)] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        comp.push_back(v);
        for (int w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

/// Unit-capacity max-flow (BFS augmenting paths). Capacities sit in a dense
/// n*n residual matrix; fine for the n <= 62 graphs this library handles.
int max_flow_unit(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    std::vector<std::int8_t> cap(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) {
        cap[static_cast<size_t>(u) * n + v] = 1;
        cap[static_cast<size_t>(v) * n + u] = 1;
    }
    int flow = 0;
    std::vector<int> parent(static_cast<size_t>(n));
    while (true) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[static_cast<size_t>(s)] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && parent[static_cast<size_t>(t)] < 0) {
            int v = q.front();
            q.pop();
            for (int w = 0; w < n; ++w)
                if (parent[static_cast<size_t>(w)] < 0 && cap[static_cast<size_t>(v) * n + w] > 0) {
                    parent[static_cast<size_t>(w)] = v;
                    q.push(w);
                }
        }
        if (parent[static_cast<size_t>(t)] < 0) return flow;
        for (int v = t; v != s; v = parent[static_cast<size_t>(v)]) {
            int p = parent[static_cast<size_t>(v)];
            cap[static_cast<size_t>(p) * n + v]--;
            cap[static_cast<size_t>(v) * n + p]++;
        }
        ++flow;
    }
}

} // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    return static_cast<int>(bfs_component(g, 0, seen).size()) == n;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> comps;
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<size_t>(v)]) comps.push_back(bfs_component(g, v, seen));
    return comps;
}

int edge_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) {
        best = std::min(best, max_flow_unit(g, 0, t));
        if (best == 0) break;
    }
    return best;
}

bool is_three_edge_connected(const Graph& g) { return edge_connectivity(g) >= 3; }

int girth(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    std::vector<int> dist(static_cast<size_t>(n)), par(static_cast<size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<size_t>(s)] = 0;
        par[static_cast<size_t>(s)] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (w == par[static_cast<size_t>(v)]) continue;
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    par[static_cast<size_t>(w)] = v;
                    q.push(w);
                } else {
                    int len = dist[static_cast<size_t>(v)] + dist[static_cast<size_t>(w)] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

bool is_cut_vertex(const Graph& g, int v) {
    int n = g.vertex_count();
    if (n <= 2) return false;
    int start = v == 0 ? 1 : 0;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(v)] = 1; // masked out
    int reached = static_cast<int>(bfs_component(g, start, seen).size());
    return reached != n - 1;
}

namespace {

bool ham_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& used) {
    int n = g.vertex_count();
    if (static_cast<int>(path.size()) == n) return g.has_edge(path.back(), path.front());
    for (int w : g.neighbors(path.back())) {
        if (used[static_cast<size_t>(w)]) continue;
        used[static_cast<size_t>(w)] = 1;
        path.push_back(w);
        if (ham_dfs(g, path, used)) return true;
        path.pop_back();
        used[static_cast<size_t>(w)] = 0;
    }
    return false;
}

} // namespace

bool is_hamiltonian(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    if (!is_connected(g) || g.min_degree() < 2) return false;
    std::vector<int> path{0};
    std::vector<char> used(static_cast<size_t>(n), 0);
    used[0] = 1;
    return ham_dfs(g, path, used);
}

namespace {

bool color_edges(const Graph& g, std::vector<int>& color, size_t e, int max_used) {
    if (e == g.edges().size()) return true;
    auto [u, v] = g.edge(static_cast<int>(e));
    int blocked = 0;
    for (int w : g.neighbors(u)) {
        int c = color[static_cast<size_t>(g.edge_index(u, w))];
        if (c >= 0) blocked |= 1 << c;
    }
    for (int w : g.neighbors(v)) {
        int c = color[static_cast<size_t>(g.edge_index(v, w))];
        if (c >= 0) blocked |= 1 << c;
    }
    // colors beyond the first unused one are interchangeable with it, so
    // capping at max_used+1 only removes palette permutations
    int cap = std::min(2, max_used + 1);
    for (int c = 0; c <= cap; ++c) {
        if (blocked & (1 << c)) continue;
        color[e] = c;
        if (color_edges(g, color, e + 1, std::max(max_used, c))) return true;
        color[e] = -1;
    }
    return false;
}

} // namespace

bool is_three_edge_colorable(const Graph& g) {
    if (g.max_degree() > 3) return false;
    std::vector<int> color(g.edges().size(), -1);
    return color_edges(g, color, 0, -1);
}

} // namespace frank

#include "frank/enumerate_cubic.hpp"

#include <algorithm>

#include "frank/bits.hpp"
#include "frank/connectivity.hpp"
#include "frank/isomorphism.hpp"

namespace frank {

namespace {

struct Generator {
    int n = 0;
    int target_edges = 0;
    std::uint32_t adj[12] = {};
    int deg[12] = {};
    int edge_count = 0;
    std::vector<Graph> out;

    void add(int lo, int hi) {
        adj[lo] |= 1u << hi;
        adj[hi] |= 1u << lo;
        ++deg[lo];
        ++deg[hi];
        ++edge_count;
    }
    void remove(int lo, int hi) {
        adj[lo] &= ~(1u << hi);
        adj[hi] &= ~(1u << lo);
        --deg[lo];
        --deg[hi];
        --edge_count;
    }

    /// A fully saturated connected component that misses some vertex can
    /// never merge with the rest, so the branch cannot reach a connected
    /// cubic graph.
    bool has_sealed_component() const {
        std::uint32_t seen = 0;
        for (int v = 0; v < n; ++v) {
            if (deg[v] == 0 || has_bit(seen, v)) continue;
            std::uint32_t comp = 1u << v, frontier = comp;
            bool saturated = true;
            while (frontier) {
                int w = ctz64(frontier);
                frontier &= frontier - 1;
                if (deg[w] < 3) saturated = false;
                std::uint32_t fresh = adj[w] & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            if (saturated && popcount64(comp) < n) return true;
            seen |= comp;
        }
        return false;
    }

    /// Every vertex in the colex-frozen region must still be able to reach
    /// degree 3 with edges that are colex-greater than (lo,hi).
    bool deficits_satisfiable(int lo, int hi) const {
        for (int v = 0; v <= hi; ++v) {
            int deficit = 3 - deg[v];
            if (deficit <= 0) continue;
            int cap = 0;
            if (v < hi) {
                if (v > lo && deg[hi] < 3 && !has_bit(adj[v], hi)) ++cap;
                for (int w = hi + 1; w < n && cap < deficit; ++w)
                    if (!has_bit(adj[v], w)) ++cap;
            } else { // v == hi
                for (int u = lo + 1; u < hi && cap < deficit; ++u)
                    if (deg[u] < 3 && !has_bit(adj[v], u)) ++cap;
                cap += n - 1 - hi;
            }
            if (cap < deficit) return false;
        }
        return true;
    }

    void emit() {
        std::vector<std::pair<int, int>> pairs;
        for (int v = 0; v < n; ++v) {
            std::uint32_t nb = adj[v] >> (v + 1) << (v + 1);
            while (nb) {
                int w = ctz64(nb);
                nb &= nb - 1;
                pairs.emplace_back(v, w);
            }
        }
        Graph g = Graph::build(n, pairs);
        if (edge_connectivity(g) >= 3) out.push_back(std::move(g));
    }

    void extend(int last_lo, int last_hi) {
        if (edge_count == target_edges) {
            emit();
            return;
        }
        for (int hi = std::max(last_hi, 1); hi < n; ++hi) {
            if (deg[hi] >= 3) continue;
            int lo_begin = hi == last_hi ? last_lo + 1 : 0;
            for (int lo = lo_begin; lo < hi; ++lo) {
                if (deg[lo] >= 3 || has_bit(adj[lo], hi)) continue;
                add(lo, hi);
                if (deficits_satisfiable(lo, hi) && !has_sealed_component() &&
                    detail::is_canonically_labeled(n, adj_as32()))
                    extend(lo, hi);
                remove(lo, hi);
            }
        }
    }

    const std::uint32_t* adj_as32() const { return adj; }
};

} // namespace

std::vector<Graph> enumerate_cubic_3ec(int n) {
    if (n % 2 != 0) raise(errc::odd_order, "cubic graphs need even order");
    if (n > 12) raise(errc::too_large, "enumeration limited to n <= 12");
    if (n < 4) return {};

    Generator gen;
    gen.n = n;
    gen.target_edges = 3 * n / 2;
    gen.extend(-1, 0);

    std::sort(gen.out.begin(), gen.out.end(), [](const Graph& a, const Graph& b) {
        return canonical_edge_code(a) < canonical_edge_code(b);
    });
    return gen.out;
}

} // namespace frank

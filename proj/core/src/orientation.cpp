#include "frank/orientation.hpp"

#include "frank/bits.hpp"

namespace frank {

Orientation::Orientation(const Graph& g, std::uint64_t bits) : g_(&g), bits_(bits) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n > 64 || m > 64) raise(errc::space_too_large, "orientations need n <= 64 and m <= 64");
    mask_ = low_bits(m);
    if (bits & ~mask_) raise(errc::length_mismatch, "direction bits beyond edge count");
    out_.assign(static_cast<size_t>(n), 0);
    in_.assign(static_cast<size_t>(n), 0);
    for (int e = 0; e < m; ++e) {
        auto [t, h] = arc(e);
        out_[static_cast<size_t>(t)] |= bit(h);
        in_[static_cast<size_t>(h)] |= bit(t);
    }
}

int Orientation::out_degree(int v) const { return popcount64(out_[static_cast<size_t>(v)]); }
int Orientation::in_degree(int v) const { return popcount64(in_[static_cast<size_t>(v)]); }

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> a;
    a.reserve(static_cast<size_t>(edge_count()));
    for (int e = 0; e < edge_count(); ++e) a.push_back(arc(e));
    return a;
}

std::string Orientation::bitstring() const {
    std::string s(static_cast<size_t>(edge_count()), '0');
    for (int e = 0; e < edge_count(); ++e)
        if (from_lower(e)) s[static_cast<size_t>(e)] = '1';
    return s;
}

Orientation make_orientation(const Graph& g, const std::vector<bool>& bits) {
    if (static_cast<int>(bits.size()) != g.edge_count())
        raise(errc::length_mismatch, "got " + std::to_string(bits.size()) + " bits for " +
                                         std::to_string(g.edge_count()) + " edges");
    std::uint64_t b = 0;
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) b |= bit(static_cast<int>(i));
    return Orientation(g, b);
}

Orientation orientation_from_arcs(const Graph& g, const std::vector<std::pair<int, int>>& arcs) {
    if (static_cast<int>(arcs.size()) != g.edge_count())
        raise(errc::length_mismatch, "arc list length != edge count");
    std::uint64_t b = 0;
    for (size_t i = 0; i < arcs.size(); ++i) {
        auto [t, h] = arcs[i];
        auto e = g.edge(static_cast<int>(i));
        if (t == e.u && h == e.v) b |= bit(static_cast<int>(i));
        else if (!(t == e.v && h == e.u))
            raise(errc::length_mismatch, "arc " + std::to_string(i) + " does not match edge " +
                                             std::to_string(i));
    }
    return Orientation(g, b);
}

Orientation reverse_orientation(const Orientation& o) { return o.reversed(); }

namespace {

/// Bitmask BFS: vertices reachable from `start` over out-masks.
std::uint64_t reach_set(const std::vector<std::uint64_t>& out, int start) {
    std::uint64_t reached = bit(start), frontier = bit(start);
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = ctz64(f);
            f &= f - 1;
            next |= out[static_cast<size_t>(v)];
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached;
}

} // namespace

bool is_strongly_connected(const Orientation& o) {
    int n = o.graph().vertex_count();
    if (n <= 1) return true;
    std::uint64_t all = low_bits(n);
    std::vector<std::uint64_t> out(static_cast<size_t>(n)), in(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        out[static_cast<size_t>(v)] = o.out_mask(v);
        in[static_cast<size_t>(v)] = o.in_mask(v);
    }
    return reach_set(out, 0) == all && reach_set(in, 0) == all;
}

bool is_deletable(const Orientation& o, int e, bool check_sc) {
    if (check_sc && !is_strongly_connected(o))
        raise(errc::not_strongly_connected, "is_deletable needs a strongly connected orientation");
    auto [t, h] = o.arc(e);
    // path query from t to h with the single arc t->h masked out
    int n = o.graph().vertex_count();
    std::vector<std::uint64_t> out(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(v)] = o.out_mask(v);
    out[static_cast<size_t>(t)] &= ~bit(h);
    return has_bit(reach_set(out, t), h);
}

int DeletableSet::size() const { return popcount64(edges); }

DeletableSet deletable_set(const Orientation& o, bool redgreen_prune) {
    if (!is_strongly_connected(o))
        raise(errc::not_strongly_connected, "deletable_set needs a strongly connected orientation");
    const Graph& g = o.graph();
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<std::uint64_t> out(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(v)] = o.out_mask(v);

    bool prune = redgreen_prune && g.is_cubic();
    DeletableSet ds;
    ds.orientation_bits = o.bits();
    for (int e = 0; e < m; ++e) {
        auto [t, h] = o.arc(e);
        if (prune && (o.out_degree(t) != 2 || o.in_degree(h) != 2)) continue;
        out[static_cast<size_t>(t)] &= ~bit(h);
        if (has_bit(reach_set(out, t), h)) ds.edges |= bit(e);
        out[static_cast<size_t>(t)] |= bit(h);
    }
    return ds;
}

VertexColoring color_vertices(const Orientation& o) {
    const Graph& g = o.graph();
    VertexColoring c;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 3 && o.out_degree(v) == 2) c.red |= bit(v);
        else if (g.degree(v) == 3 && o.in_degree(v) == 2) c.green |= bit(v);
        else c.neutral |= bit(v);
    }
    return c;
}

} // namespace frank

#include "frank/isomorphism.hpp"

#include <algorithm>

#include "frank/bits.hpp"

namespace frank {

namespace {

// Edge key in colex order: (max endpoint << 6) | min endpoint, so numeric
// comparison of keys equals colex comparison of edges.
inline std::uint16_t edge_key(int lo, int hi) {
    return static_cast<std::uint16_t>((hi << 6) | lo);
}

std::vector<std::uint16_t> identity_code(int n, const std::uint32_t* adj) {
    std::vector<std::uint16_t> code;
    for (int hi = 1; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (has_bit(adj[hi], lo)) code.push_back(edge_key(lo, hi));
    return code;
}

// Chunk order: at a fixed new label L, a chunk (bitmask of adjacencies to
// labels < L) contributes edges (j, L) for its set bits j ascending. Chunk A
// precedes chunk B iff at the lowest differing bit A has the edge.
inline bool chunk_less(std::uint32_t a, std::uint32_t b) {
    if (a == b) return false;
    std::uint32_t diff = a ^ b;
    return (a >> ctz64(diff)) & 1u;
}

// Shared state of the minimal-code search. `mode` TEST looks for any
// relabeling strictly below the reference code and stops; SMALLER also
// completes that relabeling greedily so the caller can iterate to a minimum.
struct CodeSearch {
    int n = 0;
    const std::uint32_t* adj = nullptr;
    const std::uint16_t* ref = nullptr; // reference code, length = edge count

    std::vector<int> vertex_at;    // new label -> original vertex
    std::vector<std::uint32_t> chunk; // per original vertex: adjacency to assigned labels
    std::uint32_t used = 0;

    bool twin(int u, int w) const {
        return (adj[u] & ~bit(w)) == (adj[w] & ~bit(u));
    }

    void assign(int label, int v) {
        vertex_at[static_cast<size_t>(label)] = v;
        used |= static_cast<std::uint32_t>(bit(v));
        std::uint32_t nb = adj[v];
        while (nb) {
            int w = ctz64(nb);
            nb &= nb - 1;
            chunk[static_cast<size_t>(w)] |= 1u << label;
        }
    }

    void unassign(int label, int v) {
        used &= ~static_cast<std::uint32_t>(bit(v));
        std::uint32_t nb = adj[v];
        while (nb) {
            int w = ctz64(nb);
            nb &= nb - 1;
            chunk[static_cast<size_t>(w)] &= ~(1u << label);
        }
        vertex_at[static_cast<size_t>(label)] = -1;
    }

    // Compares the chunk's edges against ref starting at code position pos.
    // Returns -1 (strictly smaller), +1 (strictly larger), or 0 with pos
    // advanced past the matched entries.
    int compare_chunk(std::uint32_t c, int label, int& pos) const {
        std::uint32_t bits = c;
        while (bits) {
            int j = ctz64(bits);
            bits &= bits - 1;
            std::uint16_t key = edge_key(j, label);
            if (key < ref[pos]) return -1;
            if (key > ref[pos]) return +1;
            ++pos;
        }
        return 0;
    }

    // Greedy completion used once a branch is known to be strictly smaller:
    // from here any labeling stays smaller, so just take minimal chunks.
    void complete_greedy(int level) {
        for (int l = level; l < n; ++l) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (used & (1u << v)) continue;
                if (best < 0 || chunk_less(chunk[static_cast<size_t>(v)],
                                           chunk[static_cast<size_t>(best)]))
                    best = v;
            }
            assign(l, best);
        }
    }

    // Core DFS. Returns true if a strictly smaller relabeling exists; when it
    // does and complete_on_hit is set, vertex_at holds a full labeling whose
    // code is strictly smaller than ref.
    bool find_smaller(int level, int pos, bool complete_on_hit) {
        if (level == n) return false;

        // candidate originals, twin-deduplicated and sorted by chunk order
        int cand[32];
        int nc = 0;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            bool dup = false;
            for (int i = 0; i < nc && !dup; ++i) dup = twin(cand[i], v);
            if (!dup) cand[nc++] = v;
        }
        std::sort(cand, cand + nc, [&](int a, int b) {
            return chunk_less(chunk[static_cast<size_t>(a)], chunk[static_cast<size_t>(b)]);
        });

        for (int i = 0; i < nc; ++i) {
            int v = cand[i];
            int npos = pos;
            int cmp = compare_chunk(chunk[static_cast<size_t>(v)], level, npos);
            if (cmp > 0) return false; // later candidates are >= this chunk
            if (cmp < 0) {
                if (complete_on_hit) {
                    assign(level, v);
                    complete_greedy(level + 1);
                }
                return true;
            }
            assign(level, v);
            if (find_smaller(level + 1, npos, complete_on_hit)) return true;
            unassign(level, v);
        }
        return false;
    }
};

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    int n = g.vertex_count();
    if (n > 32) raise(errc::too_large, "canonical form limited to n <= 32");
    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= 1u << v;
        adj[static_cast<size_t>(v)] |= 1u << u;
    }
    return adj;
}

std::vector<std::uint16_t> code_of_labeling(int n, const std::uint32_t* adj,
                                            const std::vector<int>& vertex_at) {
    std::vector<int> label_of(static_cast<size_t>(n));
    for (int l = 0; l < n; ++l) label_of[static_cast<size_t>(vertex_at[static_cast<size_t>(l)])] = l;
    std::vector<std::uint16_t> code;
    for (int hi = 1; hi < n; ++hi)
        for (int lo = 0; lo < hi; ++lo)
            if (has_bit(adj[static_cast<size_t>(vertex_at[static_cast<size_t>(hi)])],
                        vertex_at[static_cast<size_t>(lo)]))
                code.push_back(edge_key(lo, hi));
    return code;
}

} // namespace

std::vector<std::uint16_t> canonical_edge_code(const Graph& g, std::vector<int>* vertex_at) {
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    std::vector<std::uint16_t> best = identity_code(n, adj.data());
    std::vector<int> best_labeling(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) best_labeling[static_cast<size_t>(i)] = i;

    // Iterate: search for any strictly smaller relabeling, adopt it, repeat.
    // Terminates because the code strictly decreases each round.
    while (true) {
        CodeSearch s;
        s.n = n;
        s.adj = adj.data();
        s.ref = best.data();
        s.vertex_at.assign(static_cast<size_t>(n), -1);
        s.chunk.assign(static_cast<size_t>(n), 0);
        if (!s.find_smaller(0, 0, /*complete_on_hit=*/true)) break;
        best_labeling = s.vertex_at;
        best = code_of_labeling(n, adj.data(), best_labeling);
    }
    if (vertex_at) *vertex_at = best_labeling;
    return best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto da = [&] {
        std::vector<int> d;
        for (int v = 0; v < a.vertex_count(); ++v) d.push_back(a.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }();
    auto db = [&] {
        std::vector<int> d;
        for (int v = 0; v < b.vertex_count(); ++v) d.push_back(b.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }();
    if (da != db) return false;
    return canonical_edge_code(a) == canonical_edge_code(b);
}

namespace detail {

bool is_canonically_labeled(int n, const std::uint32_t* adj) {
    auto ident = identity_code(n, adj);
    CodeSearch s;
    s.n = n;
    s.adj = adj;
    s.ref = ident.data();
    s.vertex_at.assign(static_cast<size_t>(n), -1);
    s.chunk.assign(static_cast<size_t>(n), 0);
    return !s.find_smaller(0, 0, /*complete_on_hit=*/false);
}

} // namespace detail

namespace {

constexpr std::size_t kMaxGroupElements = 1u << 20;

void collect_automorphisms(int n, const std::vector<std::uint32_t>& adj,
                           std::vector<std::uint32_t>& chunk, std::uint32_t& used,
                           std::vector<int>& vertex_at, int level,
                           std::vector<std::vector<int>>& out) {
    if (level == n) {
        out.push_back(vertex_at);
        if (out.size() > kMaxGroupElements)
            raise(errc::too_large, "automorphism group too large to materialize");
        return;
    }
    // the image of label `level` must reproduce the original adjacency chunk
    std::uint32_t want = adj[static_cast<size_t>(level)] & low_bits(level);
    for (int v = 0; v < n; ++v) {
        if (used & (1u << v)) continue;
        if (chunk[static_cast<size_t>(v)] != want) continue;
        if (popcount64(adj[static_cast<size_t>(v)]) != popcount64(adj[static_cast<size_t>(level)]))
            continue;
        vertex_at[static_cast<size_t>(level)] = v;
        used |= 1u << v;
        std::uint32_t nb = adj[static_cast<size_t>(v)];
        while (nb) {
            int w = ctz64(nb);
            nb &= nb - 1;
            chunk[static_cast<size_t>(w)] |= 1u << level;
        }
        collect_automorphisms(n, adj, chunk, used, vertex_at, level + 1, out);
        nb = adj[static_cast<size_t>(v)];
        while (nb) {
            int w = ctz64(nb);
            nb &= nb - 1;
            chunk[static_cast<size_t>(w)] &= ~(1u << level);
        }
        used &= ~(1u << v);
    }
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
    std::vector<int> h(f.size());
    for (size_t i = 0; i < f.size(); ++i) h[i] = f[static_cast<size_t>(g[i])];
    return h;
}

} // namespace

AutGroup automorphism_group(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) raise(errc::too_large, "automorphism_group limited to n <= 12");
    auto adj = adjacency_masks(g);

    AutGroup out;
    std::vector<std::uint32_t> chunk(static_cast<size_t>(n), 0);
    std::uint32_t used = 0;
    std::vector<int> vertex_at(static_cast<size_t>(n), -1);
    collect_automorphisms(n, adj, chunk, used, vertex_at, 0, out.elements);
    std::sort(out.elements.begin(), out.elements.end());

    // greedy generating set: add an element whenever it is not yet generated
    std::vector<std::vector<int>> known;
    std::vector<int> id(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<size_t>(i)] = i;
    known.push_back(id);
    auto generated = [&](const std::vector<int>& p) {
        return std::binary_search(known.begin(), known.end(), p);
    };
    for (const auto& e : out.elements) {
        if (generated(e)) continue;
        out.generators.push_back(e);
        // closure under composition with the new generator
        std::vector<std::vector<int>> frontier = known;
        known.push_back(e);
        std::sort(known.begin(), known.end());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> next;
            for (const auto& a : known)
                for (const auto& gen : out.generators) {
                    auto p = compose(a, gen);
                    if (!std::binary_search(known.begin(), known.end(), p)) next.push_back(p);
                }
            if (!next.empty()) {
                grew = true;
                known.insert(known.end(), next.begin(), next.end());
                std::sort(known.begin(), known.end());
                known.erase(std::unique(known.begin(), known.end()), known.end());
            }
        }
        if (known.size() == out.elements.size()) break;
    }
    return out;
}

} // namespace frank

#pragma once

// Internal scanning machinery shared by solver.cpp and cover_search.cpp.
// Not installed; everything here assumes n <= 64 and m <= 64.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

#include "frank/bits.hpp"
#include "frank/error.hpp"
#include "frank/graph.hpp"

namespace frank::internal {

using scan_clock = std::chrono::steady_clock;

inline double seconds_since(scan_clock::time_point t0) {
    return std::chrono::duration<double>(scan_clock::now() - t0).count();
}

/// Mutable orientation scratchpad: endpoint tables plus incrementally
/// maintained out/in masks, so flipping one edge is O(1) and the
/// strong-connectivity test is a pair of bitmask BFS sweeps.
struct Scanner {
    int n = 0, m = 0;
    std::uint64_t all_v = 0;
    int eu[64], ev[64];
    std::uint64_t out[64], in[64];
    std::uint64_t bits = 0;

    void init(const Graph& g, std::uint64_t start_bits) {
        n = g.vertex_count();
        m = g.edge_count();
        all_v = low_bits(n);
        bits = start_bits;
        for (int v = 0; v < n; ++v) out[v] = in[v] = 0;
        for (int e = 0; e < m; ++e) {
            eu[e] = g.edge(e).u;
            ev[e] = g.edge(e).v;
            int t = has_bit(bits, e) ? eu[e] : ev[e];
            int h = has_bit(bits, e) ? ev[e] : eu[e];
            out[t] |= bit(h);
            in[h] |= bit(t);
        }
    }

    void set_bits(std::uint64_t want) {
        std::uint64_t delta = bits ^ want;
        while (delta) {
            int e = ctz64(delta);
            delta &= delta - 1;
            flip(e);
        }
    }

    void flip(int e) {
        int t = has_bit(bits, e) ? eu[e] : ev[e];
        int h = has_bit(bits, e) ? ev[e] : eu[e];
        out[t] &= ~bit(h);
        in[h] &= ~bit(t);
        out[h] |= bit(t);
        in[t] |= bit(h);
        bits ^= bit(e);
    }

    std::uint64_t forward_reach(int start) const {
        std::uint64_t reached = bit(start), frontier = reached;
        while (frontier) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int v = ctz64(f);
                f &= f - 1;
                next |= out[v];
            }
            frontier = next & ~reached;
            reached |= frontier;
        }
        return reached;
    }

    std::uint64_t backward_reach(int start) const {
        std::uint64_t reached = bit(start), frontier = reached;
        while (frontier) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int v = ctz64(f);
                f &= f - 1;
                next |= in[v];
            }
            frontier = next & ~reached;
            reached |= frontier;
        }
        return reached;
    }

    bool strongly_connected() const {
        for (int v = 0; v < n; ++v)
            if (out[v] == 0 || in[v] == 0) return false;
        return forward_reach(0) == all_v && backward_reach(0) == all_v;
    }

    /// Single-arc deletability: does a directed path from the arc's tail to
    /// its head survive removing the arc? The cheap necessary condition
    /// (another out-arc at the tail, another in-arc at the head) runs first;
    /// for cubic graphs it is exactly the red->green condition.
    bool arc_deletable(int e) const {
        int t = has_bit(bits, e) ? eu[e] : ev[e];
        int h = has_bit(bits, e) ? ev[e] : eu[e];
        std::uint64_t tout = out[t] & ~bit(h);
        if (tout == 0 || (in[h] & (in[h] - 1)) == 0) return false;
        std::uint64_t tgt = bit(h);
        std::uint64_t reached = bit(t) | tout, frontier = tout;
        while (frontier && !(reached & tgt)) {
            std::uint64_t next = 0, f = frontier;
            while (f) {
                int v = ctz64(f);
                f &= f - 1;
                next |= out[v];
            }
            frontier = next & ~reached;
            reached |= frontier;
        }
        return (reached & tgt) != 0;
    }

    /// Deletable edges of the current (strongly connected) orientation.
    std::uint64_t deletable_edges() const {
        std::uint64_t ds = 0;
        for (int e = 0; e < m; ++e)
            if (arc_deletable(e)) ds |= bit(e);
        return ds;
    }
};

struct ScanControl {
    std::atomic<bool> stop{false};
    scan_clock::time_point deadline{};
    bool has_deadline = false;

    void set_budget(double seconds) {
        if (seconds > 0) {
            has_deadline = true;
            deadline = scan_clock::now() + std::chrono::duration_cast<scan_clock::duration>(
                                               std::chrono::duration<double>(seconds));
        }
    }
};

/// Scans counter values in [begin, end); the orientation bits of counter x
/// are x itself, optionally shifted past a fixed first edge, so fn sees
/// strongly connected orientations in ascending bit order. Returns the number
/// of counters visited (== end - begin unless ctl stopped the scan).
template <class Fn>
std::uint64_t scan_range(const Graph& g, bool fix, std::uint64_t begin, std::uint64_t end,
                         ScanControl* ctl, Fn&& fn) {
    Scanner s;
    auto bits_of = [fix](std::uint64_t x) { return fix ? (x << 1) | 1 : x; };
    s.init(g, bits_of(begin));
    std::uint64_t visited = 0;
    for (std::uint64_t x = begin; x < end; ++x, ++visited) {
        if ((visited & 0xfff) == 0 && ctl) {
            if (ctl->stop.load(std::memory_order_relaxed)) break;
            if (ctl->has_deadline && scan_clock::now() > ctl->deadline) {
                ctl->stop.store(true, std::memory_order_relaxed);
                break;
            }
        }
        if (s.strongly_connected()) fn(s);
        if (x + 1 < end) {
            std::uint64_t delta = x ^ (x + 1);
            while (delta) {
                int i = ctz64(delta);
                delta &= delta - 1;
                s.flip(fix ? i + 1 : i);
            }
        }
    }
    return visited;
}

inline std::uint64_t orientation_space(const Graph& g, bool fix) {
    int m = g.edge_count();
    int free_bits = fix && m >= 1 ? m - 1 : m;
    return std::uint64_t{1} << free_bits;
}

/// Splits [0, total) into one contiguous range per worker and joins them.
/// fn(worker_index, begin, end) must only touch worker-local state.
template <class Fn>
void run_chunks(std::uint64_t total, int workers, Fn&& fn) {
    int w = std::max(1, workers);
    if (total < (std::uint64_t{1} << 14)) w = 1;
    w = static_cast<int>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(total, 1)));
    if (w == 1) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> threads;
    std::uint64_t chunk = total / w, rem = total % w;
    std::uint64_t begin = 0;
    for (int i = 0; i < w; ++i) {
        std::uint64_t len = chunk + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
        threads.emplace_back([&fn, i, begin, len] { fn(i, begin, begin + len); });
        begin += len;
    }
    for (auto& t : threads) t.join();
}

} // namespace frank::internal

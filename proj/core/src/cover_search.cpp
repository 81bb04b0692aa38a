#include "frank/cover_search.hpp"

#include <algorithm>
#include <vector>

#include "frank/bits.hpp"
#include "frank/connectivity.hpp"
#include "scan_internal.hpp"

namespace frank {

using internal::Scanner;

namespace {

/// Mixes the user seed with the restart index into an independent stream.
std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t restart) {
    rng64 r(seed ^ (0x6a09e667f3bcc909ull + restart * 0x9e3779b97f4a7c15ull));
    return r.next();
}

/// Draws random direction bits and repairs them to strong connectivity:
/// while some vertex set is unreachable from vertex 0 (or cannot reach it),
/// every edge across that cut points the wrong way, so reversing one random
/// cut edge makes progress. Returns false if repair stalls.
bool random_sc_orientation(const Graph& g, Scanner& s, rng64& rng) {
    int m = g.edge_count();
    for (int attempt = 0; attempt < 8; ++attempt) {
        s.set_bits(rng.next() & low_bits(m));
        for (int step = 0; step < 16 * m; ++step) {
            std::uint64_t fwd = s.forward_reach(0);
            std::uint64_t missing = s.all_v & ~fwd;
            if (!missing) {
                std::uint64_t bwd = s.backward_reach(0);
                missing = s.all_v & ~bwd;
                if (!missing) return true;
                // all cut edges leave the backward-reachable side; flip one
                std::uint64_t cut = 0;
                for (int e = 0; e < m; ++e) {
                    bool iu = has_bit(bwd, s.eu[e]), iv = has_bit(bwd, s.ev[e]);
                    if (iu != iv) cut |= bit(e);
                }
                int pick = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(popcount64(cut))));
                for (int e = 0; e < m; ++e)
                    if (has_bit(cut, e) && pick-- == 0) {
                        s.flip(e);
                        break;
                    }
                continue;
            }
            std::uint64_t cut = 0;
            for (int e = 0; e < m; ++e) {
                bool iu = has_bit(fwd, s.eu[e]), iv = has_bit(fwd, s.ev[e]);
                if (iu != iv) cut |= bit(e);
            }
            if (!cut) break; // disconnected graph; repair cannot help
            int pick = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(popcount64(cut))));
            for (int e = 0; e < m; ++e)
                if (has_bit(cut, e) && pick-- == 0) {
                    s.flip(e);
                    break;
                }
        }
        if (s.strongly_connected()) return true;
    }
    return false;
}

struct RestartResult {
    bool found = false;
    std::vector<std::uint64_t> orientation_bits;
};

RestartResult run_restart(const Graph& g, int k, std::uint64_t seed, std::uint64_t restart) {
    rng64 rng(restart_seed(seed, restart));
    int m = g.edge_count();
    std::uint64_t full = low_bits(m);

    std::vector<Scanner> scanners(static_cast<size_t>(k));
    std::vector<std::uint64_t> delsets(static_cast<size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        scanners[static_cast<size_t>(i)].init(g, 0);
        if (!random_sc_orientation(g, scanners[static_cast<size_t>(i)], rng)) return {};
        delsets[static_cast<size_t>(i)] = scanners[static_cast<size_t>(i)].deletable_edges();
    }
    auto covered = [&] {
        std::uint64_t u = 0;
        for (auto d : delsets) u |= d;
        return u;
    };

    std::uint64_t cov = covered();
    int best = popcount64(cov);
    const int max_steps = 600 * m;
    const int stagnation_limit = 120 * m;
    int since_improvement = 0;
    for (int step = 0; step < max_steps && best < m; ++step) {
        int i = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(k)));
        Scanner& s = scanners[static_cast<size_t>(i)];
        int e;
        std::uint64_t uncovered = full & ~cov;
        if (uncovered && (rng.next() & 1)) {
            // bias: flip an arc adjacent to an uncovered edge to open a path for it
            int pick = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(popcount64(uncovered))));
            int target = 0;
            for (int j = 0; j < m; ++j)
                if (has_bit(uncovered, j) && pick-- == 0) {
                    target = j;
                    break;
                }
            std::uint64_t near = 0;
            for (int j = 0; j < m; ++j) {
                if (j == target) continue;
                if (g.edge(j).u == g.edge(target).u || g.edge(j).v == g.edge(target).v ||
                    g.edge(j).u == g.edge(target).v || g.edge(j).v == g.edge(target).u)
                    near |= bit(j);
            }
            near |= bit(target);
            int np = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(popcount64(near))));
            e = 0;
            for (int j = 0; j < m; ++j)
                if (has_bit(near, j) && np-- == 0) {
                    e = j;
                    break;
                }
        } else {
            e = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
        }

        s.flip(e);
        if (!s.strongly_connected()) {
            s.flip(e);
            continue;
        }
        std::uint64_t old_ds = delsets[static_cast<size_t>(i)];
        delsets[static_cast<size_t>(i)] = s.deletable_edges();
        std::uint64_t ncov = covered();
        int score = popcount64(ncov);
        if (score >= best) {
            if (score > best) since_improvement = 0;
            best = score;
            cov = ncov;
        } else {
            s.flip(e);
            delsets[static_cast<size_t>(i)] = old_ds;
        }
        if (++since_improvement > stagnation_limit) break;
    }

    if (best < m) return {};
    RestartResult r;
    r.found = true;
    for (auto& s : scanners) r.orientation_bits.push_back(s.bits);
    return r;
}

} // namespace

std::optional<Certificate> cover_search(const Graph& g, int k, const CoverSearchOptions& opts) {
    if (edge_connectivity(g) < 3)
        raise(errc::not_three_edge_connected, "cover_search needs a 3-edge-connected graph");
    if (g.edge_count() > 62 || g.vertex_count() > 64)
        raise(errc::space_too_large, "cover_search needs n <= 64 and m <= 62");

    auto t0 = internal::scan_clock::now();
    int w = std::max(1, opts.workers);
    std::uint64_t next_restart = 0;
    while (internal::seconds_since(t0) < opts.budget_seconds) {
        if (opts.max_restarts > 0 &&
            next_restart >= static_cast<std::uint64_t>(opts.max_restarts))
            break;
        // one batch of w restart indices; the lowest successful index wins,
        // so the outcome does not depend on the worker count
        std::vector<RestartResult> results(static_cast<size_t>(w));
        if (w == 1) {
            results[0] = run_restart(g, k, opts.seed, next_restart);
        } else {
            std::vector<std::thread> threads;
            for (int i = 0; i < w; ++i)
                threads.emplace_back([&, i] {
                    results[static_cast<size_t>(i)] =
                        run_restart(g, k, opts.seed, next_restart + static_cast<std::uint64_t>(i));
                });
            for (auto& t : threads) t.join();
        }
        for (const auto& res : results)
            if (res.found) {
                std::vector<Orientation> os;
                for (auto b : res.orientation_bits) os.emplace_back(g, b);
                Certificate c = make_certificate(g, os);
                if (!verify_certificate(g, c).ok) continue; // belt and braces
                return c;
            }
        next_restart += static_cast<std::uint64_t>(w);
    }
    return std::nullopt;
}

} // namespace frank

#include "frank/certificates.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "frank/bits.hpp"
#include "frank/families.hpp"
#include "frank/graph6.hpp"
#include "scan_internal.hpp"

namespace frank {

namespace {

/// Collects one arc per edge and complains about gaps or double assignment,
/// which catches transcription mistakes in the constructions immediately.
struct ArcBuilder {
    const Graph& g;
    std::uint64_t bits = 0;
    std::uint64_t assigned = 0;

    explicit ArcBuilder(const Graph& graph) : g(graph) {}

    void arc(int t, int h) {
        int e = g.edge_index(t, h);
        if (e < 0)
            raise(errc::certificate_invalid,
                  "construction uses non-edge (" + std::to_string(t) + "," + std::to_string(h) + ")");
        if (has_bit(assigned, e))
            raise(errc::certificate_invalid, "edge " + std::to_string(e) + " oriented twice");
        assigned |= bit(e);
        if (t < h) bits |= bit(e);
    }

    bool done(int e) const { return has_bit(assigned, e); }

    Orientation finish() const {
        if (assigned != low_bits(g.edge_count()))
            raise(errc::certificate_invalid, "construction left edges unoriented");
        return Orientation(g, bits);
    }
};

Certificate finish_certificate(const Graph& g, const std::vector<Orientation>& os,
                               const std::string& what) {
    Certificate c = make_certificate(g, os);
    auto vr = verify_certificate(g, c);
    if (!vr.ok)
        raise(errc::certificate_invalid, what + " construction failed verification: " + vr.failure);
    return c;
}

} // namespace

Certificate wheel_certificate(int n) {
    if (n < 3) raise(errc::invalid_parameter, "wheel certificate needs n >= 3");
    Graph g = generate_family(FamilySpec::wheel(n)); // hub 0, rim 1..n

    ArcBuilder o1(g), o2(g);
    if (n % 2 == 0) {
        // rim circuit in both orientations; spokes alternate and then flip
        for (int i = 1; i <= n; ++i) {
            int next = i == n ? 1 : i + 1;
            o1.arc(i, next);
            o2.arc(i, next);
            if (i % 2 == 1) { o1.arc(i, 0); o2.arc(0, i); }
            else { o1.arc(0, i); o2.arc(i, 0); }
        }
    } else {
        // rim path 1->...->n plus the arc (1,n); spokes leave the hub at 1, 2
        // and alternate after that
        for (int i = 1; i < n; ++i) o1.arc(i, i + 1);
        o1.arc(1, n);
        o1.arc(0, 1);
        o1.arc(0, 2);
        for (int i = 3; i <= n; ++i) {
            if (i % 2 == 0) o1.arc(0, i);
            else o1.arc(i, 0);
        }
        // reversed rim circuit; spokes into the hub at odd indices
        for (int i = n; i >= 2; --i) o2.arc(i, i - 1);
        o2.arc(1, n);
        for (int i = 1; i <= n; ++i) {
            if (i % 2 == 1) o2.arc(i, 0);
            else o2.arc(0, i);
        }
    }
    return finish_certificate(g, {o1.finish(), o2.finish()}, "wheel(" + std::to_string(n) + ")");
}

Certificate mobius_certificate(int n) {
    if (n < 4 || n % 2 != 0) raise(errc::invalid_parameter, "mobius certificate needs even n >= 4");
    Graph g = generate_family(FamilySpec::mobius(n)); // rim v_i = i-1, diagonals {i-1, i-1+n/2}
    int half = n / 2;
    auto P = [](int i) { return i - 1; }; // 1-based rim label to vertex

    ArcBuilder o1(g);
    for (int i = 1; i <= n; ++i) o1.arc(P(i), P(i % n + 1));
    for (int i = 1; i <= half; ++i) {
        if (i % 2 == 1) o1.arc(P(i), P(i + half));
        else o1.arc(P(i + half), P(i));
    }

    ArcBuilder o2(g);
    if (half % 2 == 1) {
        // same rim circuit, diagonals reversed
        for (int i = 1; i <= n; ++i) o2.arc(P(i), P(i % n + 1));
        for (int i = 1; i <= half; ++i) {
            if (i % 2 == 1) o2.arc(P(i + half), P(i));
            else o2.arc(P(i), P(i + half));
        }
    } else {
        // circuit through every vertex but v_{half+1}, entered via diagonals
        std::vector<int> walk{1, 2};
        for (int a = 2; a < half; a += 2) {
            walk.push_back(a + half);
            walk.push_back(a + half + 1);
            walk.push_back(a + 1);
            walk.push_back(a + 2);
        }
        walk.push_back(n);
        for (size_t i = 0; i + 1 < walk.size(); ++i) o2.arc(P(walk[i]), P(walk[i + 1]));
        o2.arc(P(n), P(1));
        // the three arcs covering v_{half+1}
        o2.arc(P(half), P(half + 1));
        o2.arc(P(half + 2), P(half + 1));
        o2.arc(P(half + 1), P(1));
        // remaining rim edges run forward, except v_{n-1}v_n which must leave v_n
        for (int i = 1; i <= n; ++i) {
            int j = i % n + 1;
            int e = g.edge_index(P(i), P(j));
            if (o2.done(e)) continue;
            if (i == n - 1) o2.arc(P(n), P(n - 1));
            else o2.arc(P(i), P(j));
        }
    }
    return finish_certificate(g, {o1.finish(), o2.finish()}, "mobius(" + std::to_string(n) + ")");
}

namespace {

/// First prism orientation, both parities: outer cycle forward, inner cycle
/// backward, spokes leaving odd-indexed outer vertices.
Orientation prism_first(const Graph& g, int k) {
    ArcBuilder o(g);
    auto V = [](int i) { return i - 1; };         // outer v_i
    auto U = [k](int i) { return k + i - 1; };    // inner u_i
    for (int i = 1; i <= k; ++i) {
        int j = i % k + 1;
        o.arc(V(i), V(j));
        o.arc(U(j), U(i));
        if (i % 2 == 1) o.arc(V(i), U(i));
        else o.arc(U(i), V(i));
    }
    return o.finish();
}

Orientation prism_second_candidate(const Graph& g, int k, bool reverse_spokes, int outer_flip,
                                   int inner_flip) {
    ArcBuilder o(g);
    auto V = [](int i) { return i - 1; };
    auto U = [k](int i) { return k + i - 1; };
    for (int i = 1; i <= k; ++i) {
        int j = i % k + 1;
        if (i == outer_flip) o.arc(V(j), V(i));
        else o.arc(V(i), V(j));
        if (i == inner_flip) o.arc(U(i), U(j));
        else o.arc(U(j), U(i));
        bool spoke_out = (i % 2 == 1) != reverse_spokes; // leaves v_i
        if (spoke_out) o.arc(V(i), U(i));
        else o.arc(U(i), V(i));
    }
    return o.finish();
}

} // namespace

Certificate prism_certificate(int k) {
    if (k < 3) raise(errc::invalid_parameter, "prism certificate needs k >= 3");
    Graph g = generate_family(FamilySpec::prism(k));
    Orientation o1 = prism_first(g, k);

    if (k % 2 == 0) {
        // reversing all spokes covers the complementary arcs
        Orientation o2 = prism_second_candidate(g, k, true, 0, 0);
        return finish_certificate(g, {o1, o2}, "prism(" + std::to_string(k) + ")");
    }

    // odd k: the second orientation keeps the cycle shapes but needs one
    // flipped arc on each cycle; search the flip positions (paper-style
    // flips at the {v_1,v_2} / {u_1,u_2} edges first) and both spoke phases
    std::uint64_t full = low_bits(g.edge_count());
    std::uint64_t missing = full & ~deletable_set(o1).edges;
    for (bool reverse_spokes : {true, false})
        for (int fo = 1; fo <= k; ++fo)
            for (int fi = 1; fi <= k; ++fi) {
                Orientation o2 = prism_second_candidate(g, k, reverse_spokes, fo, fi);
                if (!is_strongly_connected(o2)) continue;
                if ((missing & ~deletable_set(o2).edges) != 0) continue;
                return finish_certificate(g, {o1, o2}, "prism(" + std::to_string(k) + ")");
            }
    raise(errc::certificate_invalid,
          "prism(" + std::to_string(k) + "): no second orientation in the construction family");
}

namespace {

std::map<int, Certificate>& gp_cache() {
    static std::map<int, Certificate> cache;
    return cache;
}
std::mutex gp_cache_mutex;

/// First orientation of gp(2s+1, s): all outer arcs forward (a circuit),
/// spoke chords towards the outer vertex at odd indices, the inner chain
/// following the +s steps of the long circuit, and both arcs at the skipped
/// inner vertex pointing into it.
Orientation gp_first(const Graph& g, int s) {
    int n = 2 * s + 1;
    ArcBuilder o(g);
    auto outer = [](int j) { return j; };       // 0-based u_{j+1}
    auto inner = [n](int j) { return n + j; };  // 0-based v_{j+1}
    for (int j = 0; j < n; ++j) o.arc(outer(j), outer((j + 1) % n));
    // spokes; 1-based index i = j+1
    o.arc(inner(0), outer(0));         // circuit arc (v_1, u_1)
    o.arc(outer(n - 1), inner(n - 1)); // circuit arc (u_{2s+1}, v_{2s+1})
    o.arc(inner(s), outer(s));         // spoke at the skipped vertex leaves it
    for (int i = 2; i <= 2 * s; ++i) {
        if (i == s + 1) continue;
        if (i % 2 == 1) o.arc(inner(i - 1), outer(i - 1));
        else o.arc(outer(i - 1), inner(i - 1));
    }
    // inner chain of the long circuit: z_{j+1} = z_j + s (mod n) from v_{2s+1}
    int z = n - 1;
    for (int step = 0; step < 2 * s - 1; ++step) {
        int nz = (z + s) % n;
        o.arc(inner(z), inner(nz));
        z = nz;
    }
    o.arc(inner(0), inner(s));
    o.arc(inner(n - 1), inner(s));
    return o.finish();
}

} // namespace

Certificate gp_certificate(int s) {
    if (s < 3) raise(errc::invalid_parameter, "gp certificate needs s >= 3");
    {
        std::lock_guard<std::mutex> lock(gp_cache_mutex);
        auto it = gp_cache().find(s);
        if (it != gp_cache().end()) return it->second;
    }

    int n = 2 * s + 1;
    Graph g = generate_family(FamilySpec::gp(n, s));
    Orientation o1 = gp_first(g, s);
    std::uint64_t full = low_bits(g.edge_count());
    std::uint64_t missing = full & ~deletable_set(o1).edges;

    std::vector<int> inner_edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).u >= n) inner_edges.push_back(e);

    // base of the second orientation: spokes kept, outer reversed except one
    // arc; `keep` is the 0-based tail of the kept outer arc (u_keep, u_keep+1)
    auto outer_base = [&](int keep) {
        std::uint64_t bits = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge(e);
            if (u >= n) continue; // inner edge, searched below
            if (v >= n) {
                bits |= o1.bits() & bit(e); // spoke kept
                continue;
            }
            bool wrap = (u == 0 && v == n - 1);
            int tail = wrap ? n - 1 : u;
            bool kept_forward = tail == keep;
            // forward arc goes tail -> tail+1; reversal flips it
            bool from_low;
            if (wrap) from_low = kept_forward ? false : true; // forward wrap is (n-1, 0)
            else from_low = kept_forward;
            if (from_low) bits |= bit(e);
        }
        return bits;
    };

    auto search_inner = [&](int keep) -> std::optional<std::uint64_t> {
        std::uint64_t base = outer_base(keep);
        internal::Scanner sc;
        sc.init(g, base);
        std::uint64_t count = std::uint64_t{1} << n;
        std::uint64_t prev = 0;
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            std::uint64_t delta = mask ^ prev;
            while (delta) {
                int i = ctz64(delta);
                delta &= delta - 1;
                sc.flip(inner_edges[static_cast<size_t>(i)]);
            }
            prev = mask;
            if (!sc.strongly_connected()) continue;
            bool ok = true;
            std::uint64_t need = missing;
            while (need && ok) {
                int e = ctz64(need);
                need &= need - 1;
                ok = sc.arc_deletable(e);
            }
            if (ok) return sc.bits;
        }
        return std::nullopt;
    };

    // nominal kept arc is (u_{2s-1}, u_{2s}): 0-based tail 2s-2; other keeps
    // are fallbacks for the rotated odd-s variant
    std::vector<int> keeps{2 * s - 2};
    for (int j = 0; j < n; ++j)
        if (j != 2 * s - 2) keeps.push_back(j);
    for (int keep : keeps) {
        if (auto bits2 = search_inner(keep)) {
            Certificate c = finish_certificate(g, {o1, Orientation(g, *bits2)},
                                               "gp(" + std::to_string(n) + "," + std::to_string(s) + ")");
            std::lock_guard<std::mutex> lock(gp_cache_mutex);
            gp_cache()[s] = c;
            return c;
        }
    }
    raise(errc::completion_not_found,
          "gp(" + std::to_string(n) + "," + std::to_string(s) +
              "): no inner completion makes the pair verify");
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("FRANK_FIXTURES"); env && *env) return env;
    return "tests/fixtures/snark-certificates";
}

std::optional<Certificate> load_fixture_certificate(const Graph& g, const std::string& dir) {
    std::ifstream manifest(dir + "/manifest.json");
    if (!manifest) return std::nullopt;
    nlohmann::json m;
    try {
        manifest >> m;
    } catch (...) {
        return std::nullopt;
    }
    std::string key = write_graph6(g);
    for (const auto& entry : m.value("certificates", nlohmann::json::array())) {
        if (entry.value("graph6", "") != key) continue;
        std::ifstream in(dir + "/" + entry.value("file", ""));
        if (!in) continue;
        std::stringstream buf;
        buf << in.rdbuf();
        try {
            Certificate c = Certificate::from_json_text(buf.str());
            if (verify_certificate(g, c).ok) return c;
        } catch (...) {
            continue;
        }
    }
    return std::nullopt;
}

} // namespace frank
